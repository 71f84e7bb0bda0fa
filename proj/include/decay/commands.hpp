#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "decay/labeling.hpp"

namespace decay {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
  kExitSuccess = 0,
  /// The method ran but produced no certificate.
  kExitNoCertificate = 1,
  /// Bad flags, unreadable or invalid map file.
  kExitUsage = 2,
};

struct CommandOptions {
  std::string map_path;
  double radius = 1.0;
  double epsilon = 0.01;
  std::size_t max_iterations = 1000;
  double stop_tol = 1e-6;
  std::size_t k_max = 10000;
  TieBreak tie_break = TieBreak::Max;

  // sweep
  std::string family;
  std::vector<std::size_t> dims;
  std::vector<double> epsilons;
  std::size_t instances = 10;
  std::uint64_t seed = 0;
  /// CSV destination; empty writes the CSV to `out` and the summary to `err`.
  std::string out_path;
};

// Each command writes a human-readable report followed by one line
// `RESULT: key=value ...` to `out`, diagnostics to `err`, and returns an ExitCode.

int cmd_find(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sweep(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_spectral(const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace decay
