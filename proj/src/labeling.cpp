#include "decay/labeling.hpp"

#include <stdexcept>
#include <string>

namespace decay {

Label label_from_image(std::span<const double> s, std::span<const double> image, double eps, TieBreak tie_break) {
  const std::size_t n = s.size();
  if (tie_break == TieBreak::Max) {
    for (std::size_t k = n; k-- > 0;)
      if (image[k] + eps <= s[k]) return static_cast<int>(k + 1);
  } else {
    for (std::size_t k = 0; k < n; ++k)
      if (image[k] + eps <= s[k]) return static_cast<int>(k + 1);
  }
  return std::nullopt;
}

Label label_eps(const MonotoneMap& t, const OrthantVector& s, double eps, TieBreak tie_break) {
  if (!(eps > 0.0)) throw std::invalid_argument("labeling slack eps must be positive");
  const auto image = t(s);
  return label_from_image(s.values(), image.values(), eps, tie_break);
}

std::vector<int> omega_membership(const MonotoneMap& t, const OrthantVector& s) {
  const auto image = t(s);
  std::vector<int> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (image[k] < s[k]) out.push_back(static_cast<int>(k + 1));
  return out;
}

LabeledVertexSet::LabeledVertexSet(std::vector<OrthantVector> vertices, std::vector<Label> labels)
    : vertices_(std::move(vertices)), labels_(std::move(labels)) {
  if (vertices_.size() != labels_.size()) throw std::invalid_argument("labels must be parallel to vertices");
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b)
      if (vertices_[a] == vertices_[b]) {
        throw std::invalid_argument("duplicate vertex " + format(vertices_[a]));
      }
}

LabeledVertexSet LabeledVertexSet::without(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("vertex index out of range");
  auto v = vertices_;
  auto l = labels_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(index));
  l.erase(l.begin() + static_cast<std::ptrdiff_t>(index));
  return LabeledVertexSet(std::move(v), std::move(l));
}

bool labels_complete(std::span<const Label> labels, std::size_t n) {
  if (labels.size() != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (const auto& l : labels) {
    if (!l || *l < 1 || static_cast<std::size_t>(*l) > n || seen[*l]) return false;
    seen[*l] = true;
  }
  return true;
}

bool is_complete(const LabeledVertexSet& vs, std::size_t n) {
  if (vs.size() != n) {
    throw std::invalid_argument("completeness needs exactly " + std::to_string(n) + " vertices, got " +
                                std::to_string(vs.size()));
  }
  return labels_complete(vs.labels(), n);
}

}  // namespace decay
