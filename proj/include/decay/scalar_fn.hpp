#pragma once

#include <string>
#include <vector>

namespace decay {

/// Scalar function R_+ -> R_+ from a closed, serializable vocabulary:
/// zero, c*t, t^a, c*t^a, and pointwise sums or maxima of these.
class ScalarFn {
 public:
  enum class Kind { Zero, Linear, Power, ScaledPower, Sum, Max };

  ScalarFn() = default;  // the zero function

  static ScalarFn zero() { return {}; }
  static ScalarFn identity() { return linear(1.0); }
  static ScalarFn linear(double coef);
  static ScalarFn power(double exponent);
  static ScalarFn scaled_power(double coef, double exponent);
  static ScalarFn sum(std::vector<ScalarFn> terms);
  static ScalarFn max(std::vector<ScalarFn> terms);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double coef() const { return coef_; }
  double exponent() const { return exponent_; }
  const std::vector<ScalarFn>& terms() const { return terms_; }
  bool is_zero() const { return kind_ == Kind::Zero; }

  bool operator==(const ScalarFn&) const = default;

 private:
  Kind kind_ = Kind::Zero;
  double coef_ = 0.0;
  double exponent_ = 1.0;
  std::vector<ScalarFn> terms_;
};

std::string describe(const ScalarFn& f);

/// {0} followed by 25 log-spaced points from 1e-3 to 1e3.
const std::vector<double>& sample_grid();

/// Log-spaced grid with `count` points between lo and hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// Empty string when f is a valid gain (f(0)=0 within 1e-12, nondecreasing on the
/// sample grid); otherwise a diagnostic naming the violated property.
std::string gain_violation(const ScalarFn& f);

/// Same for class K-infinity: zero at zero, strictly increasing on the sample grid,
/// and unbounded (every leaf a positive power with a nonnegative coefficient, at
/// least one leaf with a positive coefficient).
std::string k_infinity_violation(const ScalarFn& f);

}  // namespace decay
