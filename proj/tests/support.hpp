#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "decay/order.hpp"

namespace testing {

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline decay::OrthantVector random_point(std::mt19937_64& g, std::size_t n, double hi) {
  std::vector<double> x(n);
  for (auto& v : x) v = uniform(g, 0.0, hi);
  return decay::OrthantVector(x);
}

/// A point >= x, with some components left equal.
inline decay::OrthantVector random_above(std::mt19937_64& g, const decay::OrthantVector& x, double spread) {
  std::vector<double> y = x.components();
  for (auto& v : y)
    if (uniform(g, 0.0, 1.0) < 0.7) v += uniform(g, 0.0, spread);
  return decay::OrthantVector(y);
}

}  // namespace testing
