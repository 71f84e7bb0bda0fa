#pragma once

#include <cstddef>
#include <cstdint>

#include "decay/matrix.hpp"
#include "decay/order.hpp"

namespace decay {

/// Radii within this distance below 1 count as >= 1.
inline constexpr double kUnitRadiusSlack = 1e-10;

/// Spectral radius of a nonnegative matrix by power iteration from e/n, stopping
/// when the estimate changes by less than tol (relative). Periodic matrices, on
/// which the plain iteration oscillates, are retried on A + 1e-3 I.
/// Throws std::runtime_error if neither run converges within 1e5 steps.
double spectral_radius(const NonnegativeMatrix& a, double tol = 1e-12);

/// Unit (1-norm) nonnegative eigenvector for rho(A), with ||A v - rho v||_inf < 1e-8.
/// Throws if rho(A) = 0 or the iteration does not settle on an eigenvector.
OrthantVector perron_direction(const NonnegativeMatrix& a);

/// Entries drawn uniformly from [0,1) with std::mt19937_64 seeded by `seed`
/// (53-bit mantissa from the top bits of each draw), then rescaled so that
/// rho = rho_target. Bit-for-bit reproducible across platforms.
NonnegativeMatrix random_contractive(std::size_t n, double rho_target, std::uint64_t seed);

/// sum_k A^k, truncated once ||A^k||_inf < tol, so ||(I - A) M - I||_inf < tol.
/// Throws std::domain_error when rho(A) >= 1 - kUnitRadiusSlack.
Matrix neumann_inverse(const NonnegativeMatrix& a, double tol = 1e-12);

}  // namespace decay
