#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "decay/homotopy.hpp"
#include "decay/maxpreserving.hpp"
#include "support.hpp"

using namespace decay;

namespace {

GainTable table(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, ScalarFn>> entries) {
  GainTable g(n);
  for (const auto& [i, j, f] : entries) g.set(i - 1, j - 1, f);
  return g;
}

ScalarFn lin(double c) { return ScalarFn::linear(c); }

GainTable half_cycle(std::size_t n) {
  GainTable g(n);
  for (std::size_t i = 0; i < n; ++i) g.set(i, (i + 1) % n, lin(0.5));
  return g;
}

}  // namespace

TEST_CASE("cycle_condition examples") {
  CHECK(cycle_condition(table(2, {{1, 2, lin(0.5)}, {2, 1, lin(0.5)}})).holds);
  CHECK(cycle_condition(GainTable(3)).holds);

  const auto bad = cycle_condition(table(2, {{1, 2, lin(2)}, {2, 1, ScalarFn::identity()}}));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->cycle == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(bad.witness->trailing_self_loop);
  CHECK(bad.witness->value == doctest::Approx(2 * bad.witness->t));
  CHECK(bad.witness->value >= bad.witness->t);
}

TEST_CASE("cycle_condition covers self-loops and longer cycles") {
  const auto loop = cycle_condition(table(3, {{2, 2, ScalarFn::identity()}}));
  CHECK_FALSE(loop.holds);
  CHECK(loop.witness->cycle == std::vector<std::size_t>{2});

  // Every 2-cycle contracts but the 3-cycle 1 -> 2 -> 3 -> 1 does not.
  const auto three = cycle_condition(table(3, {{1, 2, lin(2)}, {2, 3, lin(1)}, {3, 1, lin(0.6)}, {2, 1, lin(0.1)}}));
  CHECK_FALSE(three.holds);
  CHECK(three.witness->cycle == std::vector<std::size_t>{1, 2, 3});
  CHECK(three.witness->value == doctest::Approx(1.2 * three.witness->t));

  // A gain below id only on part of the grid is caught where it fails.
  const auto partial = cycle_condition(table(1, {{1, 1, ScalarFn::power(2)}}));
  CHECK_FALSE(partial.holds);
  CHECK(partial.witness->t >= 1.0);

  CHECK(cycle_condition(table(2, {{1, 2, ScalarFn::scaled_power(0.9, 1)}, {2, 1, ScalarFn::identity()}})).holds);

  CHECK_THROWS_AS(cycle_condition(GainTable(13)), std::invalid_argument);
  CHECK_THROWS_AS(cycle_condition(GainTable(2), std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("cycle composition order") {
  // g12 = t^2, g21 = 0.5 t: g12 o g21 (t) = t^2 / 4 and g21 o g12 (t) = t^2 / 2.
  const auto g = table(2, {{1, 2, ScalarFn::power(2)}, {2, 1, lin(0.5)}});
  // At t = 3 only the reversed order reaches t; at t = 5 both do.
  CHECK(cycle_condition(g, std::vector<double>{3.0}).holds);
  const auto r = cycle_condition(g, std::vector<double>{5.0});
  CHECK_FALSE(r.holds);
  CHECK(r.witness->value == doctest::Approx(25.0 / 4));
}

TEST_CASE("property: the trailing self-loop check never fires first") {
  // c(g11(t)) <= c(t) whenever g11(t) <= t, so a violation there implies one on
  // the pure cycle or the self-loop, which are checked first.
  std::mt19937_64 g(62);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + g() % 3;
    GainTable gains(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (testing::uniform(g, 0, 1) < 0.6) gains.set(i, j, ScalarFn::scaled_power(testing::uniform(g, 0, 1.2), testing::uniform(g, 0.7, 1.3)));
    const auto r = cycle_condition(gains);
    if (!r.holds) CHECK_FALSE(r.witness->trailing_self_loop);
  }
}

TEST_CASE("path_q examples") {
  const auto half = table(2, {{1, 2, lin(0.5)}, {2, 1, lin(0.5)}});
  CHECK(path_q(half, 4) == OrthantVector{4, 4});
  CHECK(path_q(GainTable(3), 2.5) == OrthantVector{2.5, 2.5, 2.5});
  CHECK(path_q(half_cycle(3), 8) == OrthantVector{8, 8, 8});
  // T(te) = (2t, 0.1t), so q(t) = (2t, t).
  const auto up = table(2, {{1, 2, lin(2)}, {2, 1, lin(0.1)}});
  CHECK(path_q(up, 1) == OrthantVector{2, 1});
  CHECK_THROWS_AS(path_q(half, 0), std::invalid_argument);
}

TEST_CASE("reparametrize_path examples") {
  const auto half = table(2, {{1, 2, lin(0.5)}, {2, 1, lin(0.5)}});
  const auto q = reparametrize_path(half, 10, 1e-10);
  CHECK(q[0] == doctest::Approx(5));
  CHECK(q[1] == doctest::Approx(5));
  const auto z = reparametrize_path(GainTable(3), 6, 1e-10);
  CHECK(z[0] == doctest::Approx(2));
  CHECK(z[2] == doctest::Approx(2));
  const auto asym = reparametrize_path(table(2, {{1, 2, lin(0.5)}, {2, 1, lin(0.25)}}), 10, 1e-10);
  CHECK(asym[0] == doctest::Approx(5));
  CHECK(asym[1] == doctest::Approx(5));
  CHECK_THROWS_AS(reparametrize_path(table(2, {{1, 2, lin(2)}, {2, 1, lin(1)}}), 10, 1e-10), std::invalid_argument);
}

TEST_CASE("reparametrize_path needs bisection when q is not a multiple of e") {
  // g12 = 3 t, g21 = 0.2 t: q(t) = (3t, t), so ||q(t)||_1 = 4t.
  const auto two = table(2, {{1, 2, lin(3)}, {2, 1, lin(0.2)}});
  for (double r : {0.01, 1.0, 10.0, 1000.0}) {
    const auto q = reparametrize_path(two, r, 1e-10);
    CHECK(std::abs(one_norm(q) - r) <= 1e-10);
    CHECK(q[0] == doctest::Approx(0.75 * r));
  }
  // 1 -> 2 -> 3 -> 1 with gains 3, 0.2, 1: q(t) = (3t, t, 3t).
  const auto e = table(3, {{1, 2, lin(3)}, {2, 3, lin(0.2)}, {3, 1, lin(1)}});
  REQUIRE(cycle_condition(e).holds);
  const auto q = reparametrize_path(e, 7, 1e-12);
  CHECK(std::abs(one_norm(q) - 7) <= 1e-12);
  CHECK(q[0] == doctest::Approx(3));
  CHECK(q[1] == doctest::Approx(1));
  CHECK(q[2] == doctest::Approx(3));
}

TEST_CASE("property: q is nondecreasing in t and T q(t) <= q(t)") {
  std::mt19937_64 g(61);
  int tables = 0;
  while (tables < 60) {
    const std::size_t n = 2 + g() % 4;
    GainTable gains(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (testing::uniform(g, 0, 1) < 0.5) {
          gains.set(i, j, ScalarFn::max({lin(testing::uniform(g, 0, 1.5)),
                                         ScalarFn::scaled_power(testing::uniform(g, 0, 0.5), testing::uniform(g, 0.5, 1.0))}));
        }
    const auto check = cycle_condition(gains);
    if (!check.holds) continue;
    ++tables;
    const auto t = make_max_preserving(gains);
    OrthantVector prev = OrthantVector::zero(n);
    for (double s : default_cycle_grid()) {
      const auto q = path_q(gains, s);
      CHECK(leq(prev, q));
      CHECK(leq(t(q), q));
      prev = q;
    }
    const double r = testing::uniform(g, 0.1, 50);
    const auto q = reparametrize_path(gains, r, 1e-10);
    CHECK(std::abs(one_norm(q) - r) <= 1e-10);
    CHECK(leq(t(q), q));
  }
}

TEST_CASE("cycle condition agrees with the solver on strict tables") {
  SolverConfig cfg;
  cfg.radius = 10;
  cfg.epsilon = 1e-2;
  cfg.max_iterations = 100000;
  for (std::size_t n : {2, 3, 4}) {
    const auto gains = half_cycle(n);
    REQUIRE(cycle_condition(gains).holds);
    CHECK(find_decay_point(make_max_preserving(gains), cfg).success);
  }
  const auto bad = table(2, {{1, 2, lin(2)}, {2, 1, ScalarFn::identity()}});
  CHECK_FALSE(cycle_condition(bad).holds);
  CHECK_FALSE(find_decay_point(make_max_preserving(bad), cfg).success);
}
