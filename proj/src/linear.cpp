#include "decay/linear.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace decay {

namespace {

constexpr std::size_t kPowerCap = 100000;
constexpr double kShift = 1e-3;

struct PowerResult {
  double rho;
  std::vector<double> vector;
};

std::optional<PowerResult> power_iterate(const Matrix& a, double shift, double tol) {
  const std::size_t n = a.size();
  std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n);
  double prev = -1.0;
  for (std::size_t it = 0; it < kPowerCap; ++it) {
    multiply(a, x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += shift * x[i];
      s += y[i];
    }
    if (s <= shift) {
      // A^k e = 0 forces A^k = 0: A is nilpotent.
      return PowerResult{0.0, x};
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / s;
    if (std::abs(s - prev) <= tol * s) return PowerResult{s - shift, x};
    prev = s;
  }
  return std::nullopt;
}

PowerResult power_method(const NonnegativeMatrix& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (auto plain = power_iterate(a.matrix(), 0.0, tol)) return *plain;
  if (auto shifted = power_iterate(a.matrix(), kShift, tol)) return *shifted;
  throw std::runtime_error("power iteration did not converge");
}

}  // namespace

double spectral_radius(const NonnegativeMatrix& a, double tol) { return power_method(a, tol).rho; }

OrthantVector perron_direction(const NonnegativeMatrix& a) {
  const auto result = power_method(a, 1e-14);
  if (!(result.rho > 0.0)) throw std::invalid_argument("Perron direction needs rho(A) > 0");
  const std::size_t n = a.size();
  std::vector<double> av(n);
  multiply(a.matrix(), result.vector, av);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::abs(av[i] - result.rho * result.vector[i]) < 1e-8)) {
      throw std::runtime_error("power iteration did not settle on an eigenvector (reducible or periodic matrix?)");
    }
  }
  return OrthantVector(result.vector);
}

NonnegativeMatrix random_contractive(std::size_t n, double rho_target, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (!(rho_target > 0.0) || !std::isfinite(rho_target)) throw std::invalid_argument("target radius must be positive");
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double rho = spectral_radius(NonnegativeMatrix(m), 1e-15);
    if (rho == 0.0) continue;
    return NonnegativeMatrix((rho_target / rho) * m);
  }
  throw std::runtime_error("random draws kept producing a nilpotent matrix");
}

Matrix neumann_inverse(const NonnegativeMatrix& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double rho = spectral_radius(a);
  if (rho >= 1.0 - kUnitRadiusSlack) {
    throw std::domain_error("Neumann series diverges: spectral radius " + std::to_string(rho) + " >= 1");
  }
  const std::size_t n = a.size();
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= 1000000; ++k) {
    term = term * a.matrix();
    if (inf_norm(term) < tol) return sum;
    sum = sum + term;
  }
  throw std::runtime_error("Neumann series did not reach the tolerance");
}

}  // namespace decay
