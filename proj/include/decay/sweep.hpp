#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "decay/labeling.hpp"

namespace decay {

enum class SweepFamily { Chain, LinearRandom };

std::string to_string(SweepFamily family);
/// "chain" or "linear-random"; throws std::invalid_argument otherwise.
SweepFamily parse_sweep_family(const std::string& name);

struct SweepConfig {
  SweepFamily family = SweepFamily::Chain;
  std::vector<std::size_t> dims;
  std::vector<double> epsilons;
  double radius = 10.0;
  /// Matrices per (n, epsilon) for linear-random; chain runs once per pair.
  std::size_t instances = 10;
  std::uint64_t seed0 = 0;
  std::size_t max_iterations = 100000;
  TieBreak tie_break = TieBreak::Max;
  /// Spectral radius of the random matrices.
  double rho = 0.8;

  void validate() const;
};

struct SweepRow {
  std::string family;
  std::size_t n = 0;
  double epsilon = 0.0;
  double radius = 0.0;
  std::optional<std::uint64_t> seed;
  std::size_t iterations = 0;
  bool success = false;
  /// Wall time of the solve, including building the map.
  double ms = 0.0;
};

/// Rows ordered by (n, epsilon, seed) as listed in the config. Solves run on
/// OpenMP threads; instance k uses seed seed0 + k.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Single-threaded reference for run_sweep.
std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg);

/// Header `family,n,epsilon,r,seed,iterations,success,ms`, LF line endings.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace decay
