#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "decay/maps.hpp"
#include "decay/order.hpp"

namespace decay {

struct CycleWitness {
  /// One-based cycle i_1, ..., i_k; the composition is g_{i1 i2} o ... o g_{ik i1}.
  std::vector<std::size_t> cycle;
  /// The composition was additionally applied after the self-loop g_{i1 i1}.
  bool trailing_self_loop = false;
  double t = 0.0;
  /// Composition evaluated at t; >= t.
  double value = 0.0;
};

struct CycleCheck {
  bool holds = true;
  std::optional<CycleWitness> witness;
};

/// 49 log-spaced points from 1e-3 to 1e3.
const std::vector<double>& default_cycle_grid();

/// Checks g_{i1 i2} o ... o g_{ik i1} < id at every grid point, over all simple
/// cycles (self-loops included), each listed from its smallest index. Cycles of
/// length >= 2 are also checked with the self-loop g_{i1 i1} applied first.
/// Returns the first violation found. Throws for n > 12 or an empty grid.
CycleCheck cycle_condition(const GainTable& g, std::span<const double> grid = default_cycle_grid());

/// q(t) = max{t e, T(t e), ..., T^(n-1)(t e)} for the max-preserving map of g.
OrthantVector path_q(const GainTable& g, double t);

/// q(t) with ||q(t)||_1 = r to within tol, t found by bisection. Throws
/// std::invalid_argument if the cycle condition fails on the default grid and
/// std::runtime_error if no bracket is found within 60 halvings.
OrthantVector reparametrize_path(const GainTable& g, double r, double tol = 1e-10);

}  // namespace decay
