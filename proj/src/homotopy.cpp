#include "decay/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "decay/kuhn_slab.hpp"

namespace decay {

namespace {

// Keeps every grid coordinate exactly representable as a double.
constexpr std::int64_t kMaxGrid = std::int64_t{1} << 50;

bool passes_margin(std::span<const double> s, std::span<const double> image, double eps) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!(image[i] + eps <= s[i])) return false;
  return true;
}

double margin_of(std::span<const double> s, std::span<const double> image) {
  double m = s[0] - image[0];
  for (std::size_t i = 1; i < s.size(); ++i) m = std::min(m, s[i] - image[i]);
  return m;
}

SolveReport succeed(SolveReport report, std::span<const double> s, std::span<const double> image) {
  report.success = true;
  report.s_star = OrthantVector(std::vector<double>(s.begin(), s.end()));
  report.margin = margin_of(s, image);
  report.failure_reason.reset();
  return report;
}

SolveReport fail(SolveReport report, FailureReason reason) {
  report.success = false;
  report.failure_reason = reason;
  return report;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("radius must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (std::isnan(mesh_tolerance)) throw std::invalid_argument("mesh_tolerance must be a number");
  if (!(label_slack_factor >= 1.0) || !std::isfinite(label_slack_factor)) {
    throw std::invalid_argument("label_slack_factor must be >= 1");
  }
}

std::string to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::IterationCap: return "iteration_cap";
    case FailureReason::LabelNone: return "label_none";
    case FailureReason::NotApplicable: return "not_applicable";
  }
  return "?";
}

LabeledVertexSet entry_set(double r, std::size_t n) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<OrthantVector> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(OrthantVector::scaled_unit(n, i, r));
  return LabeledVertexSet(std::move(vertices), std::vector<Label>(n));
}

std::vector<LabeledVertexSet> complete_subsets(const LabeledVertexSet& tau, std::size_t n) {
  if (tau.size() != n + 1) {
    throw std::invalid_argument("expected " + std::to_string(n + 1) + " vertices, got " + std::to_string(tau.size()));
  }
  std::vector<LabeledVertexSet> out;
  std::vector<Label> rest(n);
  for (std::size_t drop = 0; drop <= n; ++drop) {
    for (std::size_t k = 0, w = 0; k <= n; ++k)
      if (k != drop) rest[w++] = tau.labels()[k];
    if (labels_complete(rest, n)) out.push_back(tau.without(drop));
  }
  return out;
}

LabeledVertexSet pivot_step(const LabeledVertexSet& current, const OrthantVector& new_vertex, Label new_label) {
  const std::size_t n = current.size();
  if (!new_label) throw std::invalid_argument("cannot pivot on an empty label");
  if (!is_complete(current, n)) throw std::invalid_argument("pivot needs a complete vertex set");
  const auto& labels = current.labels();
  const auto it = std::find(labels.begin(), labels.end(), new_label);
  if (it == labels.end()) throw std::invalid_argument("new label outside {1, ..., n}");
  const auto slot = static_cast<std::size_t>(it - labels.begin());
  auto vertices = current.vertices();
  auto new_labels = labels;
  vertices[slot] = new_vertex;
  new_labels[slot] = new_label;
  return LabeledVertexSet(std::move(vertices), std::move(new_labels));
}

double decay_margin(const MonotoneMap& t, const OrthantVector& s) {
  const auto image = t(s);
  return margin_of(s.values(), image.values());
}

SolveReport find_decay_point(const MonotoneMap& t, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = t.dimension();
  const double r = cfg.radius;
  const double eps = cfg.epsilon;
  const double label_eps = cfg.epsilon * cfg.label_slack_factor;
  const double mesh_tol = cfg.effective_mesh_tolerance();

  SolveReport report;
  std::vector<double> x(n), image(n);

  // Level 0: the entry set r e_i must carry label i.
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(x.begin(), x.end(), 0.0);
    x[i] = r;
    t.apply(x, image);
    if (!label_from_image(x, image, label_eps, cfg.tie_break)) {
      report.offending_point = OrthantVector(x);
      return fail(report, FailureReason::LabelNone);
    }
    if (n == 1) return succeed(report, x, image);
  }
  report.levels = 1;
  report.mesh = r;

  std::int64_t m = static_cast<std::int64_t>(n);
  // Barycentre of the entry set in cumulative coordinates of the level-1 grid.
  std::vector<double> target(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) target[j] = static_cast<double>(j + 1);

  std::vector<int> labels(n + 1);
  std::vector<std::vector<double>> facet(n, std::vector<double>(n));
  std::vector<double> centre_x(n);

  while (true) {
    if (m > kMaxGrid) return fail(report, FailureReason::NotApplicable);
    const KuhnSlab slab(n, m);
    const auto centre = slab.admissible_centre(target);
    auto simplex = slab.bottom_door(centre);
    for (std::size_t k = 0; k < n; ++k) labels[k] = slab.artificial_label(simplex.vertex(k), centre);
    std::size_t fresh = n;
    std::size_t dropped = 0;
    ++report.levels;
    report.mesh = r / static_cast<double>(m);

    while (true) {
      const auto v = simplex.vertex(fresh);
      int label;
      if (v[n - 1] == 0) {
        label = slab.artificial_label(v, centre);
      } else {
        if (report.iterations >= cfg.max_iterations) return fail(report, FailureReason::IterationCap);
        ++report.iterations;
        slab.to_sphere(v, r, x);
        t.apply(x, image);
        const Label l = label_from_image(x, image, label_eps, cfg.tie_break);
        if (!l) {
          report.offending_point = OrthantVector(x);
          return fail(report, FailureReason::LabelNone);
        }
        if (passes_margin(x, image, eps)) return succeed(report, x, image);
        label = *l;
      }
      labels[fresh] = label;

      // The facet we came through is complete, so exactly one other vertex shares the label.
      std::size_t drop = n + 1;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != fresh && labels[k] == label) {
          drop = k;
          break;
        }
      if (drop > n) throw std::logic_error("pivot facet lost completeness");

      auto next = simplex;
      const std::size_t slot = KuhnSlab::pivot(next, drop);
      if (!slab.contains(next.vertex(slot))) {
        // Left the slab through the facet opposite `drop`; only the top face is reachable.
        for (std::size_t k = 0; k <= n; ++k)
          if (k != drop && simplex.vertex(k)[n - 1] != 1) {
            throw std::logic_error("complementary path left the slab outside the top face");
          }
        dropped = drop;
        break;
      }
      if (drop == 0) {
        std::rotate(labels.begin(), labels.begin() + 1, labels.end());
      } else if (drop == n) {
        std::rotate(labels.rbegin(), labels.rbegin() + 1, labels.rend());
      }
      simplex = std::move(next);
      fresh = slot;
    }

    // The complete top facet closes this level.
    std::fill(target.begin(), target.end(), 0.0);
    std::fill(centre_x.begin(), centre_x.end(), 0.0);
    for (std::size_t k = 0, w = 0; k <= n; ++k) {
      if (k == dropped) continue;
      const auto v = simplex.vertex(k);
      slab.to_sphere(v, r, facet[w]);
      for (std::size_t j = 0; j + 1 < n; ++j) target[j] += 2.0 * static_cast<double>(v[j]) / static_cast<double>(n);
      for (std::size_t j = 0; j < n; ++j) centre_x[j] += facet[w][j] / static_cast<double>(n);
      ++w;
    }
    double diameter = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(facet[a][j] - facet[b][j]));
    report.min_diameter = std::min(report.min_diameter.value_or(diameter), diameter);

    t.apply(centre_x, image);
    if (passes_margin(centre_x, image, eps)) return succeed(report, centre_x, image);
    if (diameter < mesh_tol) return fail(report, FailureReason::NotApplicable);
    m *= 2;
  }
}

}  // namespace decay
