#include "decay/scalar_fn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace decay {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

// c * t^a with 0^a = 0 for a > 0 and the real positive branch otherwise.
double eval_power(double c, double a, double t) {
  if (t == 0.0) {
    if (a > 0.0) return 0.0;
    return c * std::pow(0.0, a);
  }
  if (a == 1.0) return c * t;
  return c * std::pow(t, a);
}

bool structurally_unbounded(const ScalarFn& f, bool& any_positive) {
  switch (f.kind()) {
    case ScalarFn::Kind::Zero: return true;
    case ScalarFn::Kind::Linear:
    case ScalarFn::Kind::Power:
    case ScalarFn::Kind::ScaledPower:
      if (f.coef() < 0.0 || f.exponent() <= 0.0) return false;
      any_positive = any_positive || f.coef() > 0.0;
      return true;
    case ScalarFn::Kind::Sum:
    case ScalarFn::Kind::Max:
      for (const auto& t : f.terms())
        if (!structurally_unbounded(t, any_positive)) return false;
      return true;
  }
  return false;
}

}  // namespace

ScalarFn ScalarFn::linear(double coef) {
  require_finite(coef, "coefficient");
  ScalarFn f;
  f.kind_ = Kind::Linear;
  f.coef_ = coef;
  return f;
}

ScalarFn ScalarFn::power(double exponent) {
  require_finite(exponent, "exponent");
  ScalarFn f;
  f.kind_ = Kind::Power;
  f.coef_ = 1.0;
  f.exponent_ = exponent;
  return f;
}

ScalarFn ScalarFn::scaled_power(double coef, double exponent) {
  require_finite(coef, "coefficient");
  require_finite(exponent, "exponent");
  ScalarFn f;
  f.kind_ = Kind::ScaledPower;
  f.coef_ = coef;
  f.exponent_ = exponent;
  return f;
}

ScalarFn ScalarFn::sum(std::vector<ScalarFn> terms) {
  if (terms.empty()) throw std::invalid_argument("sum needs at least one term");
  ScalarFn f;
  f.kind_ = Kind::Sum;
  f.terms_ = std::move(terms);
  return f;
}

ScalarFn ScalarFn::max(std::vector<ScalarFn> terms) {
  if (terms.empty()) throw std::invalid_argument("max needs at least one term");
  ScalarFn f;
  f.kind_ = Kind::Max;
  f.terms_ = std::move(terms);
  return f;
}

double ScalarFn::operator()(double t) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Linear: return coef_ * t;
    case Kind::Power:
    case Kind::ScaledPower: return eval_power(coef_, exponent_, t);
    case Kind::Sum: {
      double acc = 0.0;
      for (const auto& term : terms_) acc += term(t);
      return acc;
    }
    case Kind::Max: {
      double acc = terms_.front()(t);
      for (std::size_t i = 1; i < terms_.size(); ++i) acc = std::max(acc, terms_[i](t));
      return acc;
    }
  }
  return 0.0;
}

std::string describe(const ScalarFn& f) {
  std::ostringstream os;
  switch (f.kind()) {
    case ScalarFn::Kind::Zero: os << "0"; break;
    case ScalarFn::Kind::Linear: os << f.coef() << "*t"; break;
    case ScalarFn::Kind::Power: os << "t^" << f.exponent(); break;
    case ScalarFn::Kind::ScaledPower: os << f.coef() << "*t^" << f.exponent(); break;
    case ScalarFn::Kind::Sum:
    case ScalarFn::Kind::Max: {
      os << (f.kind() == ScalarFn::Kind::Sum ? "sum(" : "max(");
      for (std::size_t i = 0; i < f.terms().size(); ++i) os << (i ? ", " : "") << describe(f.terms()[i]);
      os << ')';
      break;
    }
  }
  return os.str();
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) throw std::invalid_argument("invalid log grid");
  std::vector<double> g(count);
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t k = 0; k < count; ++k) {
    g[k] = std::pow(10.0, a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  return g;
}

const std::vector<double>& sample_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g{0.0};
    const auto tail = log_grid(1e-3, 1e3, 25);
    g.insert(g.end(), tail.begin(), tail.end());
    return g;
  }();
  return grid;
}

std::string gain_violation(const ScalarFn& f) {
  const double at_zero = f(0.0);
  if (!(std::abs(at_zero) <= 1e-12)) return "gain must vanish at zero, got " + std::to_string(at_zero);
  const auto& grid = sample_grid();
  double prev = at_zero;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double v = f(grid[k]);
    if (!std::isfinite(v) || v < 0.0) return "gain must be finite and nonnegative";
    if (v < prev) return "gain must be nondecreasing (fails near t=" + std::to_string(grid[k]) + ")";
    prev = v;
  }
  return {};
}

std::string k_infinity_violation(const ScalarFn& f) {
  if (auto why = gain_violation(f); !why.empty()) return why;
  const auto& grid = sample_grid();
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(f(grid[k]) > f(grid[k - 1]))) {
      return "K-infinity function must be strictly increasing (fails near t=" + std::to_string(grid[k]) + ")";
    }
  }
  bool any_positive = false;
  if (!structurally_unbounded(f, any_positive) || !any_positive) return "K-infinity function must be unbounded";
  return {};
}

}  // namespace decay
