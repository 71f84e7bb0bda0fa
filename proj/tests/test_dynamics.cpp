#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "decay/dynamics.hpp"
#include "decay/linear.hpp"
#include "support.hpp"

using namespace decay;

namespace {

MonotoneMap half_swap() { return make_linear_map(NonnegativeMatrix{{0, 0.5}, {0.5, 0}}); }

}  // namespace

TEST_CASE("iterate: geometric decay") {
  const auto tr = iterate(half_swap(), {5, 5}, 10000, 1e-6);
  CHECK(tr.converged);
  // 5 * 2^-k < 1e-6 first holds at k = 23.
  int k_closed = 0;
  while (5.0 * std::pow(2.0, -k_closed) >= 1e-6) ++k_closed;
  CHECK(k_closed == 23);
  CHECK(tr.steps_used == 23);
  CHECK(tr.states[0] == OrthantVector{5, 5});
  CHECK(tr.states[1] == OrthantVector{2.5, 2.5});
  CHECK(tr.states[2] == OrthantVector{1.25, 1.25});
  CHECK(tr.final_sup_norm == 5.0 * std::pow(2.0, -23));
  CHECK(tr.nonincreasing);
}

TEST_CASE("iterate: fixed point and cap") {
  const auto zero = iterate(half_swap(), {0, 0}, 10, 1e-6);
  CHECK(zero.converged);
  CHECK(zero.steps_used == 0);
  CHECK(zero.states.size() == 1);

  const auto id = iterate(make_linear_map(NonnegativeMatrix(Matrix::identity(2))), {1, 1}, 50, 1e-6);
  CHECK_FALSE(id.converged);
  CHECK(id.steps_used == 50);
  CHECK(id.final_sup_norm == 1.0);

  CHECK_THROWS_AS(iterate(half_swap(), {1, 1}, 0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(iterate(half_swap(), {1, 1}, 10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(iterate(half_swap(), {1, 1, 1}, 10, 1e-6), std::invalid_argument);
}

TEST_CASE("iterate: flip-flop converges through T^2") {
  const auto tr = iterate(make_flipflop_map(0.5), {1, 1}, 10000, 1e-6);
  CHECK(tr.converged);
  // T^(2k) x = (0.5^(k/2), 0.5^k): even steps alone need 0.5^(k/2) < 1e-6.
  CHECK(tr.steps_used <= 2 * 40);
}

TEST_CASE("iterate: stored states follow s+ = Ts, decimated after step 100") {
  const auto t = make_linear_map(NonnegativeMatrix{{0.99}});
  const auto tr = iterate(t, {1}, 1000, 1e-300);
  CHECK_FALSE(tr.converged);
  REQUIRE(tr.states.size() == tr.step_index.size());
  CHECK(tr.step_index.size() == 101 + 90);
  for (std::size_t k = 0; k < tr.states.size(); ++k) {
    const auto step = tr.step_index[k];
    CHECK((step <= 100 || step % 10 == 0));
    double want = 1.0;
    for (std::size_t j = 0; j < step; ++j) want *= 0.99;
    CHECK(tr.states[k][0] == want);
  }
  CHECK(tr.step_index.back() == 1000);

  const auto odd = iterate(t, {1}, 105, 1e-300);
  CHECK(odd.step_index.back() == 105);
  CHECK(odd.step_index[odd.step_index.size() - 2] == 100);
}

TEST_CASE("verify_attraction examples") {
  const auto chain = verify_attraction(make_chain_map(2), {10, std::sqrt(10.0)}, 1e-6, 10000);
  CHECK(chain.attracted);
  CHECK(chain.trajectory.nonincreasing);
  CHECK_FALSE(verify_attraction(make_linear_map(NonnegativeMatrix(Matrix::identity(2))), {1, 1}, 1e-6, 10000).attracted);
  CHECK(verify_attraction(half_swap(), {5, 5}, 1e-6, 10000).attracted);
}

TEST_CASE("solve_problem1") {
  SolverConfig cfg;
  cfg.radius = 10;
  cfg.epsilon = 1e-2;
  cfg.max_iterations = 100000;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto t = make_chain_map(n);
    const auto cert = solve_problem1(t, cfg);
    REQUIRE(cert.problem1_satisfied);
    // Re-check every directly checkable property.
    const auto& s = *cert.solve.s_star;
    const auto image = t(s);
    for (std::size_t i = 0; i < n; ++i) CHECK(image[i] + cfg.epsilon <= s[i] + 1e-12);
    CHECK(std::abs(one_norm(s) - 10) <= 1e-8);
    CHECK(cert.trajectory->converged);
    CHECK(cert.trajectory->nonincreasing);
  }

  const auto id = solve_problem1(make_linear_map(NonnegativeMatrix(Matrix::identity(3))), cfg);
  CHECK_FALSE(id.problem1_satisfied);
  CHECK_FALSE(id.solve.success);
  CHECK_FALSE(id.trajectory.has_value());

  const auto lin = solve_problem1(make_linear_map(random_contractive(5, 0.8, 17)), cfg);
  CHECK(lin.problem1_satisfied);
}

TEST_CASE("ordering_check examples") {
  const auto chain = make_chain_map(2);
  CHECK(ordering_check(chain, {3, 4}, {3, 4}, 10));
  CHECK(ordering_check(chain, {1, 1}, {2, 2}, 20));
  CHECK(ordering_check(half_swap(), {0, 0}, {5, 5}, 10));
  CHECK_THROWS_AS(ordering_check(chain, {2, 1}, {1, 2}, 5), std::invalid_argument);
}

TEST_CASE("property: ordering of solutions on 500 random pairs") {
  std::mt19937_64 g(71);
  int pairs = 0;
  while (pairs < 500) {
    const std::size_t n = 2 + g() % 5;
    MonotoneMap t = make_chain_map(n);
    switch (pairs % 5) {
      case 0: break;
      case 1: t = make_linear_map(random_contractive(n, testing::uniform(g, 0.3, 1.3), g())); break;
      case 2: {
        GainTable gains(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) gains.set(i, j, ScalarFn::scaled_power(testing::uniform(g, 0, 1), testing::uniform(g, 0.5, 1.5)));
        t = make_max_preserving(gains);
        break;
      }
      case 3: {
        std::vector<ScalarFn> rho(n, ScalarFn::scaled_power(0.5, 1.2));
        t = compose(make_diagonal(rho), make_chain_map(n));
        break;
      }
      case 4:
        if (n != 2) continue;
        t = make_flipflop_map(testing::uniform(g, 0.05, 0.95));
        break;
    }
    const auto s0 = testing::random_point(g, n, 2.0);
    const auto v0 = testing::random_above(g, s0, 2.0);
    CHECK(ordering_check(t, s0, v0, 25));
    ++pairs;
  }
}

TEST_CASE("property: monotone decay from points with Ts <= s") {
  std::mt19937_64 g(72);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 6);
    const auto a = random_contractive(n, 0.8, g());
    const auto v = perron_direction(a);
    // Perron directions satisfy A v = 0.8 v <= v.
    const auto tr = iterate(make_linear_map(a), v, 10000, 1e-9);
    CHECK(tr.nonincreasing);
    CHECK(tr.converged);
  }
}
