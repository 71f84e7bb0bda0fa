#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace decay {

/// A point of the nonnegative orthant R^n_+ (n >= 1, every component >= 0).
class OrthantVector {
 public:
  explicit OrthantVector(std::vector<double> components);
  OrthantVector(std::initializer_list<double> components);

  static OrthantVector zero(std::size_t n);
  /// r * e_i, with i zero-based.
  static OrthantVector scaled_unit(std::size_t n, std::size_t i, double r);

  std::size_t size() const { return components_.size(); }
  double operator[](std::size_t i) const { return components_[i]; }
  std::span<const double> values() const { return components_; }
  const std::vector<double>& components() const { return components_; }

  bool operator==(const OrthantVector&) const = default;

 private:
  std::vector<double> components_;
};

enum class OrderRelation { LEQ, LT, LL, EQ, INCOMPARABLE, GEQ, GT, GG };

std::string to_string(OrderRelation rel);

/// Strongest relation between x and y in the componentwise order. Exact
/// floating-point comparisons; no tolerance.
OrderRelation compare(const OrthantVector& x, const OrthantVector& y);

bool leq(std::span<const double> x, std::span<const double> y);
bool ll(std::span<const double> x, std::span<const double> y);

inline bool leq(const OrthantVector& x, const OrthantVector& y) { return leq(x.values(), y.values()); }
inline bool ll(const OrthantVector& x, const OrthantVector& y) { return ll(x.values(), y.values()); }

double one_norm(std::span<const double> x);
inline double one_norm(const OrthantVector& x) { return one_norm(x.values()); }

double sup_norm(std::span<const double> x);
inline double sup_norm(const OrthantVector& x) { return sup_norm(x.values()); }

/// Rescales x onto S_r = {s >= 0 : sum s_i = r}.
OrthantVector sphere_project(const OrthantVector& x, double r);

/// Componentwise maximum, the lattice join on R^n_+.
OrthantVector join(const OrthantVector& x, const OrthantVector& y);

std::string format(const OrthantVector& x, int precision = 10);

}  // namespace decay
