#include "decay/order.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace decay {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

OrthantVector::OrthantVector(std::vector<double> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("orthant vector needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!(components_[i] >= 0.0) || std::isinf(components_[i])) {
      throw std::invalid_argument("component " + std::to_string(i) + " is not a finite nonnegative number");
    }
  }
}

OrthantVector::OrthantVector(std::initializer_list<double> components)
    : OrthantVector(std::vector<double>(components)) {}

OrthantVector OrthantVector::zero(std::size_t n) { return OrthantVector(std::vector<double>(n, 0.0)); }

OrthantVector OrthantVector::scaled_unit(std::size_t n, std::size_t i, double r) {
  if (i >= n) throw std::out_of_range("unit vector index out of range");
  std::vector<double> v(n, 0.0);
  v[i] = r;
  return OrthantVector(std::move(v));
}

std::string to_string(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::LEQ: return "LEQ";
    case OrderRelation::LT: return "LT";
    case OrderRelation::LL: return "LL";
    case OrderRelation::EQ: return "EQ";
    case OrderRelation::INCOMPARABLE: return "INCOMPARABLE";
    case OrderRelation::GEQ: return "GEQ";
    case OrderRelation::GT: return "GT";
    case OrderRelation::GG: return "GG";
  }
  return "?";
}

OrderRelation compare(const OrthantVector& x, const OrthantVector& y) {
  require_same_size(x.size(), y.size());
  bool all_le = true, all_ge = true, all_lt = true, all_gt = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = x[i], b = y[i];
    all_le = all_le && a <= b;
    all_ge = all_ge && a >= b;
    all_lt = all_lt && a < b;
    all_gt = all_gt && a > b;
  }
  if (all_le && all_ge) return OrderRelation::EQ;
  if (all_lt) return OrderRelation::LL;
  if (all_gt) return OrderRelation::GG;
  if (all_le) return OrderRelation::LT;
  if (all_ge) return OrderRelation::GT;
  return OrderRelation::INCOMPARABLE;
}

bool leq(std::span<const double> x, std::span<const double> y) {
  require_same_size(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] <= y[i])) return false;
  return true;
}

bool ll(std::span<const double> x, std::span<const double> y) {
  require_same_size(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] < y[i])) return false;
  return true;
}

double one_norm(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum;
}

double sup_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

OrthantVector sphere_project(const OrthantVector& x, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  const double norm = one_norm(x);
  if (norm == 0.0) throw std::invalid_argument("cannot project the zero vector onto a sphere");
  std::vector<double> out(x.components());
  const double scale = r / norm;
  for (double& v : out) v *= scale;
  return OrthantVector(std::move(out));
}

OrthantVector join(const OrthantVector& x, const OrthantVector& y) {
  require_same_size(x.size(), y.size());
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
  return OrthantVector(std::move(out));
}

std::string format(const OrthantVector& x, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ')';
  return os.str();
}

}  // namespace decay
