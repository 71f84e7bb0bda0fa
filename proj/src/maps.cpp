#include "decay/maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decay {

namespace {

std::string index_pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

class LinearKernel final : public MapKernel {
 public:
  explicit LinearKernel(NonnegativeMatrix a) : a_(std::move(a)) {}
  std::size_t dimension() const override { return a_.size(); }
  void apply(std::span<const double> in, std::span<double> out) const override { multiply(a_.matrix(), in, out); }

 private:
  NonnegativeMatrix a_;
};

// (Ts)_i = 1/4 (s_{i-1}^{1/i} + s_{i+1}^{i+1}), one-based, s_0 = s_{n+1} = 0.
class ChainKernel final : public MapKernel {
 public:
  explicit ChainKernel(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  void apply(std::span<const double> s, std::span<double> out) const override {
    for (std::size_t k = 0; k < n_; ++k) {
      const double i = static_cast<double>(k + 1);
      double acc = 0.0;
      if (k > 0 && s[k - 1] > 0.0) acc += std::pow(s[k - 1], 1.0 / i);
      if (k + 1 < n_ && s[k + 1] > 0.0) acc += std::pow(s[k + 1], i + 1.0);
      out[k] = 0.25 * acc;
    }
  }

 private:
  std::size_t n_;
};

class FlipflopKernel final : public MapKernel {
 public:
  explicit FlipflopKernel(double lambda) : lambda_(lambda) {}
  std::size_t dimension() const override { return 2; }
  void apply(std::span<const double> x, std::span<double> out) const override {
    const double x1 = x[0], x2 = x[1];
    out[0] = std::sqrt(x2);
    out[1] = lambda_ * x1 * x1;
  }

 private:
  double lambda_;
};

class MaxPreservingKernel final : public MapKernel {
 public:
  explicit MaxPreservingKernel(GainTable g) : g_(std::move(g)) {}
  std::size_t dimension() const override { return g_.size(); }
  void apply(std::span<const double> s, std::span<double> out) const override {
    const std::size_t n = g_.size();
    for (std::size_t i = 0; i < n; ++i) {
      double best = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& gamma = g_(i, j);
        if (!gamma.is_zero()) best = std::max(best, gamma(s[j]));
      }
      out[i] = best;
    }
  }

 private:
  GainTable g_;
};

class DiagonalKernel final : public MapKernel {
 public:
  explicit DiagonalKernel(std::vector<ScalarFn> rho) : rho_(std::move(rho)) {}
  std::size_t dimension() const override { return rho_.size(); }
  void apply(std::span<const double> s, std::span<double> out) const override {
    for (std::size_t i = 0; i < rho_.size(); ++i) out[i] = rho_[i](s[i]);
  }

 private:
  std::vector<ScalarFn> rho_;
};

class CompositionKernel final : public MapKernel {
 public:
  CompositionKernel(MonotoneMap outer, MonotoneMap inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}
  std::size_t dimension() const override { return inner_.dimension(); }
  void apply(std::span<const double> s, std::span<double> out) const override {
    std::vector<double> mid(s.size());
    inner_.apply(s, mid);
    outer_.apply(mid, out);
  }

 private:
  MonotoneMap outer_;
  MonotoneMap inner_;
};

}  // namespace

GainTable::GainTable(std::size_t n) : n_(n), gains_(n * n) {
  if (n == 0) throw std::invalid_argument("gain table needs n >= 1");
}

void GainTable::set(std::size_t i, std::size_t j, ScalarFn gain) {
  if (i >= n_ || j >= n_) throw std::out_of_range("gain index " + index_pair(i, j) + " out of range");
  if (auto why = gain_violation(gain); !why.empty()) {
    throw std::invalid_argument("gain " + index_pair(i, j) + ": " + why);
  }
  gains_[i * n_ + j] = std::move(gain);
}

MonotoneMap::MonotoneMap(std::shared_ptr<const MapKernel> kernel) : kernel_(std::move(kernel)) {
  if (!kernel_) throw std::invalid_argument("null map kernel");
}

OrthantVector MonotoneMap::operator()(const OrthantVector& s) const {
  if (s.size() != dimension()) {
    throw std::invalid_argument("dimension mismatch: map has n=" + std::to_string(dimension()) + ", point has " +
                                std::to_string(s.size()));
  }
  std::vector<double> out(s.size());
  apply(s.values(), out);
  return OrthantVector(std::move(out));
}

MonotoneMap make_linear_map(const NonnegativeMatrix& a) { return MonotoneMap(std::make_shared<LinearKernel>(a)); }

MonotoneMap make_chain_map(std::size_t n) {
  if (n < 2) throw std::invalid_argument("chain map needs n >= 2");
  return MonotoneMap(std::make_shared<ChainKernel>(n));
}

MonotoneMap make_flipflop_map(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("flip-flop parameter lambda must lie in (0,1)");
  return MonotoneMap(std::make_shared<FlipflopKernel>(lambda));
}

MonotoneMap make_max_preserving(const GainTable& gains) {
  for (std::size_t i = 0; i < gains.size(); ++i)
    for (std::size_t j = 0; j < gains.size(); ++j)
      if (auto why = gain_violation(gains(i, j)); !why.empty()) {
        throw std::invalid_argument("gain " + index_pair(i, j) + ": " + why);
      }
  return MonotoneMap(std::make_shared<MaxPreservingKernel>(gains));
}

MonotoneMap make_diagonal(const std::vector<ScalarFn>& rho) {
  if (rho.empty()) throw std::invalid_argument("diagonal map needs at least one function");
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (auto why = k_infinity_violation(rho[i]); !why.empty()) {
      throw std::invalid_argument("diagonal entry " + std::to_string(i + 1) + ": " + why);
    }
  return MonotoneMap(std::make_shared<DiagonalKernel>(rho));
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  if (outer.dimension() != inner.dimension()) throw std::invalid_argument("dimension mismatch in composition");
  return MonotoneMap(std::make_shared<CompositionKernel>(outer, inner));
}

OrthantVector chain_feasible_point(std::size_t n, double r) {
  if (n < 2) throw std::invalid_argument("chain map needs n >= 2");
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  std::vector<double> p(n);
  double factorial = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    factorial *= static_cast<double>(k + 1);
    p[k] = std::pow(r, 1.0 / factorial);
  }
  return OrthantVector(std::move(p));
}

bool CompositionSpec::operator==(const CompositionSpec& other) const {
  auto same = [](const std::shared_ptr<const MapSpec>& a, const std::shared_ptr<const MapSpec>& b) {
    if (!a || !b) return a == b;
    return *a == *b;
  };
  return same(outer, other.outer) && same(inner, other.inner);
}

std::string MapSpec::kind_name() const {
  struct Visitor {
    std::string operator()(const LinearSpec&) const { return "linear"; }
    std::string operator()(const ChainSpec&) const { return "chain"; }
    std::string operator()(const FlipflopSpec&) const { return "flipflop"; }
    std::string operator()(const MaxPreservingSpec&) const { return "maxpreserving"; }
    std::string operator()(const DiagonalSpec&) const { return "diagonal"; }
    std::string operator()(const CompositionSpec&) const { return "composition"; }
  };
  return std::visit(Visitor{}, kind);
}

std::size_t MapSpec::dimension() const {
  struct Visitor {
    std::size_t operator()(const LinearSpec& s) const { return s.matrix.size(); }
    std::size_t operator()(const ChainSpec& s) const { return s.n; }
    std::size_t operator()(const FlipflopSpec&) const { return 2; }
    std::size_t operator()(const MaxPreservingSpec& s) const { return s.gains.size(); }
    std::size_t operator()(const DiagonalSpec& s) const { return s.functions.size(); }
    std::size_t operator()(const CompositionSpec& s) const { return s.inner ? s.inner->dimension() : 0; }
  };
  return std::visit(Visitor{}, kind);
}

void validate(const MapSpec& spec) {
  // The factories enforce every invariant; building is the validation.
  (void)build_map(spec);
}

MonotoneMap build_map(const MapSpec& spec) {
  struct Visitor {
    MonotoneMap operator()(const LinearSpec& s) const { return make_linear_map(s.matrix); }
    MonotoneMap operator()(const ChainSpec& s) const { return make_chain_map(s.n); }
    MonotoneMap operator()(const FlipflopSpec& s) const { return make_flipflop_map(s.lambda); }
    MonotoneMap operator()(const MaxPreservingSpec& s) const { return make_max_preserving(s.gains); }
    MonotoneMap operator()(const DiagonalSpec& s) const { return make_diagonal(s.functions); }
    MonotoneMap operator()(const CompositionSpec& s) const {
      if (!s.outer || !s.inner) throw std::invalid_argument("composition needs both outer and inner maps");
      return compose(build_map(*s.outer), build_map(*s.inner));
    }
  };
  return std::visit(Visitor{}, spec.kind);
}

}  // namespace decay
