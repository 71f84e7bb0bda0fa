#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "decay/maps.hpp"
#include "decay/order.hpp"

namespace decay {

/// Integer label in {1, ..., n}; empty when no index qualifies.
using Label = std::optional<int>;

enum class TieBreak { Max, Min };

/// l_eps(s) = max{i : (Ts)_i + eps <= s_i} (or min, per tie_break), given Ts.
Label label_from_image(std::span<const double> s, std::span<const double> image, double eps,
                       TieBreak tie_break = TieBreak::Max);

Label label_eps(const MonotoneMap& t, const OrthantVector& s, double eps, TieBreak tie_break = TieBreak::Max);

/// {i : (Ts)_i < s_i}, one-based and ascending.
std::vector<int> omega_membership(const MonotoneMap& t, const OrthantVector& s);

/// A k-set of distinct vertices with parallel labels.
class LabeledVertexSet {
 public:
  LabeledVertexSet() = default;
  LabeledVertexSet(std::vector<OrthantVector> vertices, std::vector<Label> labels);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<OrthantVector>& vertices() const { return vertices_; }
  const std::vector<Label>& labels() const { return labels_; }

  LabeledVertexSet without(std::size_t index) const;

 private:
  std::vector<OrthantVector> vertices_;
  std::vector<Label> labels_;
};

/// True iff the n labels are exactly {1, ..., n}. Throws if vs does not have n vertices.
bool is_complete(const LabeledVertexSet& vs, std::size_t n);

/// Same test on bare labels.
bool labels_complete(std::span<const Label> labels, std::size_t n);

}  // namespace decay
