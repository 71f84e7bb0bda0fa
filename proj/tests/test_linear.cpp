#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "decay/homotopy.hpp"
#include "decay/linear.hpp"
#include "support.hpp"

using namespace decay;

namespace {

// Independent oracle: largest eigenvalue modulus from a dense eigensolver.
double eigen_radius(const Matrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues().cwiseAbs().maxCoeff();
}

Matrix random_matrix(std::mt19937_64& g, std::size_t n, double density) {
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (testing::uniform(g, 0, 1) < density) a(i, j) = testing::uniform(g, 0, 1);
  return a;
}

double residual(const Matrix& a, const Matrix& m) {
  return inf_norm((Matrix::identity(a.size()) - a) * m - Matrix::identity(a.size()));
}

}  // namespace

TEST_CASE("spectral_radius examples") {
  CHECK(spectral_radius(NonnegativeMatrix(Matrix(3))) == 0.0);
  CHECK(spectral_radius(NonnegativeMatrix{{0, 0.5}, {0.5, 0}}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(spectral_radius(NonnegativeMatrix{{0.8}}) == doctest::Approx(0.8).epsilon(1e-12));
  // Nilpotent, reducible and periodic cases.
  CHECK(spectral_radius(NonnegativeMatrix{{0, 1}, {0, 0}}) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(spectral_radius(NonnegativeMatrix{{0.5, 0}, {0, 0.8}}) == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(spectral_radius(NonnegativeMatrix{{0, 2}, {0.5, 0}}) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(spectral_radius(NonnegativeMatrix{{0, 1, 0}, {0, 0, 1}, {0.3, 0, 0}}) ==
        doctest::Approx(std::cbrt(0.3)).epsilon(1e-8));
  CHECK_THROWS_AS(spectral_radius(NonnegativeMatrix{{0.8}}, 0.0), std::invalid_argument);
}

TEST_CASE("property: spectral_radius agrees with a dense eigensolver") {
  std::mt19937_64 g(51);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 10);
    const double density = k % 3 == 0 ? 0.3 : 1.0;
    const auto a = random_matrix(g, n, density);
    const double want = eigen_radius(a);
    const double got = spectral_radius(NonnegativeMatrix(a), 1e-13);
    CHECK_MESSAGE(std::abs(got - want) <= 1e-6 * std::max(1.0, want), "n=" << n << " want=" << want << " got=" << got);
  }
}

TEST_CASE("property: permutation-structured matrices take the shifted iteration") {
  std::mt19937_64 g(52);
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i) a(i, perm[i]) = testing::uniform(g, 0.2, 2);
    CHECK(spectral_radius(NonnegativeMatrix(a)) == doctest::Approx(eigen_radius(a)).epsilon(1e-6));
  }
}

TEST_CASE("random_contractive") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 123456789ULL}) {
    const auto a = random_contractive(5, 0.8, seed);
    const double rho = spectral_radius(a);
    CHECK(rho >= 0.8 * (1 - 1e-6));
    CHECK(rho <= 0.8 * (1 + 1e-6));
    CHECK(eigen_radius(a.matrix()) == doctest::Approx(0.8).epsilon(1e-6));
    CHECK(random_contractive(5, 0.8, seed) == a);
  }
  CHECK(random_contractive(5, 0.8, 1) != random_contractive(5, 0.8, 2));
  CHECK(random_contractive(1, 0.8, 7)(0, 0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(random_contractive(0, 0.8, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_contractive(3, 0.0, 1), std::invalid_argument);
}

TEST_CASE("random_contractive is a rescaled mt19937_64 draw") {
  // Entry (i, j) is proportional to the (i n + j)-th draw (top 53 bits / 2^53).
  const std::size_t n = 4;
  const auto a = random_contractive(n, 0.8, 2024);
  std::mt19937_64 g(2024);
  std::vector<double> u(n * n);
  for (auto& v : u) v = static_cast<double>(g() >> 11) / 9007199254740992.0;
  const double scale = a(0, 0) / u[0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) CHECK(a(i, j) == doctest::Approx(scale * u[i * n + j]).epsilon(1e-14));
  // The generator itself is the standard one.
  std::mt19937_64 std_check;
  std_check.discard(9999);
  CHECK(std_check() == 9981545732273789042ULL);
}

TEST_CASE("neumann_inverse examples") {
  const auto half = neumann_inverse(NonnegativeMatrix{{0.5}});
  CHECK(half(0, 0) == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(neumann_inverse(NonnegativeMatrix(Matrix(3))) == Matrix::identity(3));
  const auto swap = neumann_inverse(NonnegativeMatrix{{0, 0.5}, {0.5, 0}});
  CHECK(swap(0, 0) == doctest::Approx(4.0 / 3).epsilon(1e-11));
  CHECK(swap(0, 1) == doctest::Approx(2.0 / 3).epsilon(1e-11));
  CHECK(swap(1, 0) == doctest::Approx(2.0 / 3).epsilon(1e-11));
  CHECK(swap(1, 1) == doctest::Approx(4.0 / 3).epsilon(1e-11));
  CHECK_THROWS_AS(neumann_inverse(NonnegativeMatrix{{1.0}}), std::domain_error);
  CHECK_THROWS_AS(neumann_inverse(NonnegativeMatrix{{0, 2}, {0.6, 0}}), std::domain_error);
}

TEST_CASE("property: Neumann residual and sign") {
  std::mt19937_64 g(53);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 7);
    const double rho = testing::uniform(g, 0.05, 0.97);
    const auto a = random_contractive(n, rho, g());
    for (double tol : {1e-6, 1e-10}) {
      const auto m = neumann_inverse(a, tol);
      CHECK(residual(a.matrix(), m) < 10 * tol);
      for (double v : m.data()) CHECK(v >= 0.0);
    }
  }
}

TEST_CASE("perron_direction") {
  const auto v = perron_direction(NonnegativeMatrix{{0, 0.5}, {0.5, 0}});
  CHECK(v[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(v[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(perron_direction(NonnegativeMatrix{{0.8}}) == OrthantVector{1.0});

  // [[0.4, 0.4], [0.1, 0.7]]: eigenvalues 0.8 and 0.3; (A - 0.8 I) v = 0 gives v ~ (1, 1).
  const NonnegativeMatrix b{{0.4, 0.4}, {0.1, 0.7}};
  CHECK(spectral_radius(b) == doctest::Approx(0.8).epsilon(1e-12));
  const auto w = perron_direction(b);
  CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS(perron_direction(NonnegativeMatrix(Matrix(2))), std::invalid_argument);
}

TEST_CASE("property: Perron residual and decay witness") {
  std::mt19937_64 g(54);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 9);
    const auto a = random_contractive(n, testing::uniform(g, 0.1, 0.99), g());
    const double rho = spectral_radius(a);
    const auto v = perron_direction(a);
    CHECK(one_norm(v) == doctest::Approx(1.0).epsilon(1e-12));
    std::vector<double> av(n);
    multiply(a.matrix(), v.values(), av);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(av[i] - rho * v[i]) < 1e-8);
    // r v is a decay point when rho < 1.
    const double r = 10;
    std::vector<double> rv(n), arv(n);
    for (std::size_t i = 0; i < n; ++i) rv[i] = r * v[i];
    multiply(a.matrix(), rv, arv);
    CHECK(ll(arv, rv));
  }
}

TEST_CASE("property: equivalence harness") {
  // The Perron witness r v has margin (1 - rho) r min_i v_i, which reaches
  // (1 - rho) r / (2n) only when min_i v_i >= 1 / (2n). The solver is required
  // to succeed wherever the witness proves an eps-decay point exists.
  const double r = 10;
  std::uint64_t seed = 5000;
  std::size_t balanced = 0, total = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (double rho : {0.5, 0.8, 0.95})
      for (int k = 0; k < 50; ++k) {
        const auto a = random_contractive(n, rho, seed++);
        const auto t = make_linear_map(a);
        CHECK(residual(a.matrix(), neumann_inverse(a)) < 1e-5);

        const auto v = perron_direction(a);
        const double min_v = *std::min_element(v.values().begin(), v.values().end());
        std::vector<double> rv(n);
        for (std::size_t i = 0; i < n; ++i) rv[i] = r * v[i];
        const double margin = decay_margin(t, OrthantVector(rv));
        CHECK(margin == doctest::Approx((1 - rho) * r * min_v).epsilon(1e-6));
        CHECK(margin > 0.0);

        SolverConfig cfg;
        cfg.radius = r;
        cfg.max_iterations = 100000;
        const double eps_balanced = (1 - rho) * r / (2 * static_cast<double>(n));
        ++total;
        if (margin >= eps_balanced) {
          ++balanced;
          cfg.epsilon = eps_balanced;
          CHECK_MESSAGE(find_decay_point(t, cfg).success, "n=" << n << " seed=" << seed - 1);
        }
        cfg.epsilon = margin / 2;
        CHECK_MESSAGE(find_decay_point(t, cfg).success, "n=" << n << " seed=" << seed - 1);
      }
  CHECK(total == 1050);
  CHECK(balanced == 921);
  for (double rho : {1.0, 1.2})
    for (int k = 0; k < 20; ++k) {
      const auto a = random_contractive(2 + static_cast<std::size_t>(k % 7), rho, seed++);
      SolverConfig cfg;
      cfg.radius = r;
      cfg.max_iterations = 100000;
      CHECK_FALSE(find_decay_point(make_linear_map(a), cfg).success);
      CHECK_THROWS_AS(neumann_inverse(a), std::domain_error);
    }
}
