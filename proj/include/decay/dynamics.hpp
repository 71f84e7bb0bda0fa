#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "decay/homotopy.hpp"
#include "decay/maps.hpp"
#include "decay/order.hpp"

namespace decay {

/// States of s+ = Ts. Every state up to step 100 is kept, then every 10th,
/// and always the last one computed.
struct TrajectoryReport {
  std::vector<OrthantVector> states;
  /// Step number of each stored state, parallel to `states`.
  std::vector<std::size_t> step_index;
  bool converged = false;
  std::size_t steps_used = 0;
  double final_sup_norm = 0.0;
  /// Every step (stored or not) satisfied T^(k+1) s0 <= T^k s0.
  bool nonincreasing = true;
};

struct IterationDefaults {
  static constexpr double stop_tol = 1e-6;
  static constexpr std::size_t k_max = 10000;
};

/// Iterates until the sup-norm drops below stop_tol (checked from step 0) or k_max steps.
TrajectoryReport iterate(const MonotoneMap& t, const OrthantVector& s0, std::size_t k_max = IterationDefaults::k_max,
                         double stop_tol = IterationDefaults::stop_tol);

struct AttractionReport {
  bool attracted = false;
  TrajectoryReport trajectory;
};

/// Whether T^k s* reaches sup-norm < stop_tol within k_max steps.
AttractionReport verify_attraction(const MonotoneMap& t, const OrthantVector& s_star,
                                   double stop_tol = IterationDefaults::stop_tol,
                                   std::size_t k_max = IterationDefaults::k_max);

struct CertificateReport {
  SolveReport solve;
  std::optional<TrajectoryReport> trajectory;
  /// s* found and its trajectory converged: [0, s*] lies in the region of attraction.
  bool problem1_satisfied = false;
};

/// Decay-point search followed by the attraction check from s*.
CertificateReport solve_problem1(const MonotoneMap& t, const SolverConfig& cfg,
                                 double stop_tol = IterationDefaults::stop_tol,
                                 std::size_t k_max = IterationDefaults::k_max);

/// T^j s0 <= T^j v0 for all j <= k. Throws std::invalid_argument unless s0 <= v0.
bool ordering_check(const MonotoneMap& t, const OrthantVector& s0, const OrthantVector& v0, std::size_t k);

}  // namespace decay
