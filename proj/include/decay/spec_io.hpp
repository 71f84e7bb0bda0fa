#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "decay/maps.hpp"

namespace decay {

/// Malformed or invalid map file. Line and column are one-based when known.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& message, std::optional<int> line = std::nullopt, std::optional<int> column = std::nullopt);

  std::optional<int> line() const { return line_; }
  std::optional<int> column() const { return column_; }

 private:
  std::optional<int> line_;
  std::optional<int> column_;
};

/// Parses a YAML map description, e.g. `{kind: linear, matrix: [[0, 0.5], [0.5, 0]]}`.
/// The schema is documented in README.md. Throws SpecError.
MapSpec parse_map_spec(const std::string& text);

MapSpec load_map_spec(const std::string& path);

/// YAML text that parse_map_spec reads back to an equal MapSpec.
std::string serialize_map_spec(const MapSpec& spec);

/// Shortest decimal string that reads back to exactly x.
std::string format_double(double x);

}  // namespace decay
