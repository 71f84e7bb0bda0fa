#include "decay/maxpreserving.hpp"

#include <cmath>
#include <stdexcept>

namespace decay {

namespace {

constexpr std::size_t kMaxCycleDimension = 12;

struct CycleSearch {
  const GainTable& g;
  std::span<const double> grid;
  std::vector<std::size_t> path;
  std::vector<bool> used;
  std::optional<CycleWitness> witness;

  // g_{p0 p1} o ... o g_{pk p0} (t), optionally after g_{p0 p0}.
  double compose_at(double t, bool self_loop) const {
    const std::size_t k = path.size();
    double v = self_loop ? g(path[0], path[0])(t) : t;
    v = g(path[k - 1], path[0])(v);
    for (std::size_t l = k - 1; l-- > 0;) v = g(path[l], path[l + 1])(v);
    return v;
  }

  bool check_closed(bool self_loop) {
    for (double t : grid) {
      const double v = compose_at(t, self_loop);
      if (!(v < t)) {
        CycleWitness w;
        for (auto i : path) w.cycle.push_back(i + 1);
        w.trailing_self_loop = self_loop;
        w.t = t;
        w.value = v;
        witness = std::move(w);
        return false;
      }
    }
    return true;
  }

  // Extends the path from its last vertex using indices above path[0].
  bool extend() {
    const std::size_t last = path.back();
    if (!g(last, path[0]).is_zero()) {
      if (!check_closed(false)) return false;
      if (path.size() > 1 && !g(path[0], path[0]).is_zero() && !check_closed(true)) return false;
    }
    for (std::size_t next = path[0] + 1; next < g.size(); ++next) {
      if (used[next] || g(last, next).is_zero()) continue;
      used[next] = true;
      path.push_back(next);
      const bool ok = extend();
      path.pop_back();
      used[next] = false;
      if (!ok) return false;
    }
    return true;
  }
};

double path_norm(const MonotoneMap& t_map, std::size_t n, double t, std::vector<double>& q) {
  std::vector<double> x(n, t), y(n);
  q.assign(n, t);
  for (std::size_t k = 1; k < n; ++k) {
    t_map.apply(x, y);
    for (std::size_t i = 0; i < n; ++i) q[i] = std::max(q[i], y[i]);
    x.swap(y);
  }
  return one_norm(q);
}

}  // namespace

const std::vector<double>& default_cycle_grid() {
  static const std::vector<double> grid = log_grid(1e-3, 1e3, 49);
  return grid;
}

CycleCheck cycle_condition(const GainTable& g, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("cycle condition needs a nonempty grid");
  if (g.size() > kMaxCycleDimension) {
    throw std::invalid_argument("cycle enumeration is limited to n <= " + std::to_string(kMaxCycleDimension));
  }
  CycleSearch search{g, grid, {}, std::vector<bool>(g.size(), false), std::nullopt};
  for (std::size_t start = 0; start < g.size(); ++start) {
    search.path = {start};
    search.used[start] = true;
    const bool ok = search.extend();
    search.used[start] = false;
    if (!ok) return CycleCheck{false, search.witness};
  }
  return CycleCheck{true, std::nullopt};
}

OrthantVector path_q(const GainTable& g, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("path parameter t must be positive");
  std::vector<double> q;
  path_norm(make_max_preserving(g), g.size(), t, q);
  return OrthantVector(std::move(q));
}

OrthantVector reparametrize_path(const GainTable& g, double r, double tol) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("radius must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (const auto check = cycle_condition(g); !check.holds) {
    throw std::invalid_argument("cycle condition fails; q(t) is not a decay path");
  }
  const auto t_map = make_max_preserving(g);
  const std::size_t n = g.size();
  std::vector<double> q;

  // q(t) >= t e, so ||q(r/n)||_1 >= r.
  double hi = r / static_cast<double>(n);
  double f_hi = path_norm(t_map, n, hi, q);
  if (std::abs(f_hi - r) <= tol) return OrthantVector(q);
  double lo = hi;
  bool bracketed = false;
  for (int k = 0; k < 60; ++k) {
    lo *= 0.5;
    const double f_lo = path_norm(t_map, n, lo, q);
    if (std::abs(f_lo - r) <= tol) return OrthantVector(q);
    if (f_lo < r) {
      bracketed = true;
      break;
    }
    hi = lo;
  }
  if (!bracketed) throw std::runtime_error("no bracket for ||q(t)||_1 = r within 60 halvings");

  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = path_norm(t_map, n, mid, q);
    if (std::abs(f_mid - r) <= tol) return OrthantVector(q);
    (f_mid < r ? lo : hi) = mid;
  }
  throw std::runtime_error("bisection did not reach ||q(t)||_1 = r within tolerance");
}

}  // namespace decay
