#include "decay/dynamics.hpp"

#include <stdexcept>

namespace decay {

namespace {

bool keep_state(std::size_t k) { return k <= 100 || k % 10 == 0; }

void check_dimension(const MonotoneMap& t, const OrthantVector& s) {
  if (s.size() != t.dimension()) {
    throw std::invalid_argument("dimension mismatch: map has n=" + std::to_string(t.dimension()) +
                                ", point has " + std::to_string(s.size()));
  }
}

}  // namespace

TrajectoryReport iterate(const MonotoneMap& t, const OrthantVector& s0, std::size_t k_max, double stop_tol) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (!(stop_tol > 0.0)) throw std::invalid_argument("stop_tol must be positive");
  check_dimension(t, s0);

  TrajectoryReport report;
  std::vector<double> x = s0.components(), y(x.size());
  report.states.push_back(s0);
  report.step_index.push_back(0);
  double norm = sup_norm(x);
  std::size_t k = 0;
  while (norm >= stop_tol && k < k_max) {
    t.apply(x, y);
    ++k;
    if (report.nonincreasing && !leq(y, x)) report.nonincreasing = false;
    x.swap(y);
    norm = sup_norm(x);
    if (keep_state(k)) {
      report.states.emplace_back(x);
      report.step_index.push_back(k);
    }
  }
  if (report.step_index.back() != k) {
    report.states.emplace_back(x);
    report.step_index.push_back(k);
  }
  report.converged = norm < stop_tol;
  report.steps_used = k;
  report.final_sup_norm = norm;
  return report;
}

AttractionReport verify_attraction(const MonotoneMap& t, const OrthantVector& s_star, double stop_tol,
                                   std::size_t k_max) {
  AttractionReport out;
  out.trajectory = iterate(t, s_star, k_max, stop_tol);
  out.attracted = out.trajectory.converged;
  return out;
}

CertificateReport solve_problem1(const MonotoneMap& t, const SolverConfig& cfg, double stop_tol, std::size_t k_max) {
  CertificateReport out;
  out.solve = find_decay_point(t, cfg);
  if (!out.solve.success) return out;
  auto attraction = verify_attraction(t, *out.solve.s_star, stop_tol, k_max);
  out.problem1_satisfied = attraction.attracted;
  out.trajectory = std::move(attraction.trajectory);
  return out;
}

bool ordering_check(const MonotoneMap& t, const OrthantVector& s0, const OrthantVector& v0, std::size_t k) {
  check_dimension(t, s0);
  check_dimension(t, v0);
  if (!leq(s0, v0)) throw std::invalid_argument("ordering check needs s0 <= v0");
  std::vector<double> s = s0.components(), v = v0.components(), tmp(s.size());
  for (std::size_t j = 1; j <= k; ++j) {
    t.apply(s, tmp);
    s.swap(tmp);
    t.apply(v, tmp);
    v.swap(tmp);
    if (!leq(s, v)) return false;
  }
  return true;
}

}  // namespace decay
