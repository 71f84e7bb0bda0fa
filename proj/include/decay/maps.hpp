#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "decay/matrix.hpp"
#include "decay/order.hpp"
#include "decay/scalar_fn.hpp"

namespace decay {

/// n x n table of gains gamma_ij (zero-based indices); unset entries are the zero function.
class GainTable {
 public:
  explicit GainTable(std::size_t n);

  std::size_t size() const { return n_; }
  const ScalarFn& operator()(std::size_t i, std::size_t j) const { return gains_[i * n_ + j]; }
  /// Validates the gain before storing it.
  void set(std::size_t i, std::size_t j, ScalarFn gain);

  bool operator==(const GainTable&) const = default;

 private:
  std::size_t n_;
  std::vector<ScalarFn> gains_;
};

/// Evaluation kernel behind a MonotoneMap. Implementations must be pure.
class MapKernel {
 public:
  virtual ~MapKernel() = default;
  virtual std::size_t dimension() const = 0;
  /// out = T(in); both spans have length dimension(), in is nonnegative.
  virtual void apply(std::span<const double> in, std::span<double> out) const = 0;
};

/// A monotone self-map T of R^n_+ with T(0) = 0. Immutable and cheap to copy.
class MonotoneMap {
 public:
  explicit MonotoneMap(std::shared_ptr<const MapKernel> kernel);

  std::size_t dimension() const { return kernel_->dimension(); }

  /// Checked evaluation: dimensions must agree.
  OrthantVector operator()(const OrthantVector& s) const;

  /// Unchecked evaluation for inner loops.
  void apply(std::span<const double> in, std::span<double> out) const { kernel_->apply(in, out); }

 private:
  std::shared_ptr<const MapKernel> kernel_;
};

MonotoneMap make_linear_map(const NonnegativeMatrix& a);
MonotoneMap make_chain_map(std::size_t n);
MonotoneMap make_flipflop_map(double lambda);
MonotoneMap make_max_preserving(const GainTable& gains);
MonotoneMap make_diagonal(const std::vector<ScalarFn>& rho);
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

/// p(r) = (r, r^(1/2!), r^(1/3!), ..., r^(1/n!)), which satisfies T p << p for the chain map.
OrthantVector chain_feasible_point(std::size_t n, double r);

// Declarative description of a map, the form read from and written to map files.

struct MapSpec;

struct LinearSpec {
  NonnegativeMatrix matrix;
  bool operator==(const LinearSpec&) const = default;
};

struct ChainSpec {
  std::size_t n;
  bool operator==(const ChainSpec&) const = default;
};

struct FlipflopSpec {
  double lambda;
  bool operator==(const FlipflopSpec&) const = default;
};

struct MaxPreservingSpec {
  GainTable gains;
  bool operator==(const MaxPreservingSpec&) const = default;
};

struct DiagonalSpec {
  std::vector<ScalarFn> functions;
  bool operator==(const DiagonalSpec&) const = default;
};

struct CompositionSpec {
  std::shared_ptr<const MapSpec> outer;
  std::shared_ptr<const MapSpec> inner;
  bool operator==(const CompositionSpec& other) const;
};

struct MapSpec {
  std::variant<LinearSpec, ChainSpec, FlipflopSpec, MaxPreservingSpec, DiagonalSpec, CompositionSpec> kind;

  std::string kind_name() const;
  std::size_t dimension() const;
  bool operator==(const MapSpec&) const = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const MapSpec& spec);

MonotoneMap build_map(const MapSpec& spec);

}  // namespace decay
