#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "decay/labeling.hpp"
#include "decay/maps.hpp"
#include "decay/order.hpp"

namespace decay {

struct SolverConfig {
  double radius = 1.0;
  double epsilon = 1e-2;
  std::size_t max_iterations = 1000;
  /// Below this diameter a complete set whose barycentre fails the test ends the
  /// search as NotApplicable; <= 0 means 1e-8 * radius.
  double mesh_tolerance = 0.0;
  TieBreak tie_break = TieBreak::Max;
  /// Pivoting labels use slack epsilon * label_slack_factor (>= 1); the returned
  /// point is certified at epsilon.
  double label_slack_factor = 1.1;

  double effective_mesh_tolerance() const { return mesh_tolerance > 0.0 ? mesh_tolerance : 1e-8 * radius; }
  void validate() const;
};

enum class FailureReason {
  IterationCap,
  LabelNone,
  /// The complete sets shrank below mesh_tolerance without a certified point.
  NotApplicable,
};

std::string to_string(FailureReason reason);

struct SolveReport {
  bool success = false;
  std::optional<OrthantVector> s_star;
  /// Number of map evaluations spent on pivots (entry-set labels excluded).
  std::size_t iterations = 0;
  /// min_i (s*_i - (Ts*)_i).
  std::optional<double> margin;
  std::optional<FailureReason> failure_reason;
  /// Point whose label came out empty, for LabelNone.
  std::optional<OrthantVector> offending_point;
  std::size_t levels = 0;
  /// Grid spacing r/m of the last level entered.
  double mesh = 0.0;
  /// Smallest sup-norm diameter over the complete sets closing each level.
  std::optional<double> min_diameter;

  bool operator==(const SolveReport&) const = default;
};

/// sigma^0 = {r e_i}, unlabeled.
LabeledVertexSet entry_set(double r, std::size_t n);

/// All complete n-vertex subsets of an (n+1)-vertex set; always zero or two of them.
std::vector<LabeledVertexSet> complete_subsets(const LabeledVertexSet& tau, std::size_t n);

/// Door-in-door-out: replaces the vertex of `current` carrying `new_label`.
LabeledVertexSet pivot_step(const LabeledVertexSet& current, const OrthantVector& new_vertex, Label new_label);

/// Searches S_r for s* with (Ts*)_i + eps <= s*_i for all i.
///
/// Level 0 is the entry set; level k >= 1 is a Kuhn-triangulated slab over the
/// grid with spacing r / (n 2^(k-1)), whose bottom face carries an artificial
/// labeling centred at the previous level's complete simplex and whose top face
/// carries l_eps. Complementary pivoting crosses each slab from its unique
/// bottom door to a complete top facet, which seeds the next, twice finer, level.
SolveReport find_decay_point(const MonotoneMap& t, const SolverConfig& cfg);

/// min_i (s_i - (Ts)_i).
double decay_margin(const MonotoneMap& t, const OrthantVector& s);

}  // namespace decay
