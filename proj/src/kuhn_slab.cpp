#include "decay/kuhn_slab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decay {

KuhnSlab::Point KuhnSlab::Simplex::vertex(std::size_t k) const {
  Point p = base;
  for (std::size_t l = 0; l < k; ++l) ++p[static_cast<std::size_t>(perm[l])];
  return p;
}

KuhnSlab::KuhnSlab(std::size_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 2) throw std::invalid_argument("slab needs n >= 2");
  if (m < static_cast<std::int64_t>(n)) throw std::invalid_argument("slab grid must satisfy m >= n");
}

bool KuhnSlab::contains(const Point& p) const {
  const std::int64_t t = p[n_ - 1];
  if (t < 0 || t > 1) return false;
  std::int64_t prev = 0;
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    if (p[j] < prev) return false;
    prev = p[j];
  }
  return prev <= m_;
}

bool KuhnSlab::contains(const Simplex& s) const {
  Point p = s.base;
  if (!contains(p)) return false;
  for (int axis : s.perm) {
    ++p[static_cast<std::size_t>(axis)];
    if (!contains(p)) return false;
  }
  return true;
}

void KuhnSlab::to_grid(const Point& p, std::span<std::int64_t> x) const {
  std::int64_t prev = 0;
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    x[j] = p[j] - prev;
    prev = p[j];
  }
  x[n_ - 1] = m_ - prev;
}

void KuhnSlab::to_sphere(const Point& p, double r, std::span<double> x) const {
  const double h = r / static_cast<double>(m_);
  std::int64_t prev = 0;
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    x[j] = static_cast<double>(p[j] - prev) * h;
    prev = p[j];
  }
  x[n_ - 1] = static_cast<double>(m_ - prev) * h;
}

std::size_t KuhnSlab::pivot(Simplex& s, std::size_t k) {
  const std::size_t n = s.perm.size();
  if (k == 0) {
    const int first = s.perm.front();
    ++s.base[static_cast<std::size_t>(first)];
    std::rotate(s.perm.begin(), s.perm.begin() + 1, s.perm.end());
    return n;
  }
  if (k == n) {
    const int last = s.perm.back();
    --s.base[static_cast<std::size_t>(last)];
    std::rotate(s.perm.rbegin(), s.perm.rbegin() + 1, s.perm.rend());
    return 0;
  }
  std::swap(s.perm[k - 1], s.perm[k]);
  return k;
}

// Maximize z_j over j = 0..n-1 with z_0 = 0 and z_j = y_{j-1} - centre_{j-1};
// ties go to the smallest j. Index j >= 1 maps to label j, index 0 to label n.
// This equals the generic labeling for the centre shifted by (eta, 2 eta, ...),
// which lies in the interior of exactly one Kuhn simplex.
int KuhnSlab::artificial_label(const Point& p, std::span<const std::int64_t> centre) const {
  std::size_t best = 0;
  std::int64_t best_value = 0;
  for (std::size_t j = 1; j < n_; ++j) {
    const std::int64_t z = p[j - 1] - centre[j - 1];
    if (z > best_value) {
      best_value = z;
      best = j;
    }
  }
  return best == 0 ? static_cast<int>(n_) : static_cast<int>(best);
}

KuhnSlab::Simplex KuhnSlab::bottom_door(std::span<const std::int64_t> centre) const {
  Simplex s;
  s.base.assign(n_, 0);
  for (std::size_t j = 0; j + 1 < n_; ++j) s.base[j] = centre[j];
  s.base[n_ - 1] = 0;
  for (std::size_t j = n_ - 1; j-- > 0;) s.perm.push_back(static_cast<int>(j));
  s.perm.push_back(static_cast<int>(n_ - 1));
  if (!contains(s)) throw std::logic_error("bottom door outside the slab; centre is not admissible");
  return s;
}

std::vector<std::int64_t> KuhnSlab::admissible_centre(std::span<const double> target) const {
  std::vector<std::int64_t> w(n_ - 1);
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    w[j] = static_cast<std::int64_t>(std::llround(target[j]));
  }
  std::int64_t lo = 0;
  for (auto& v : w) {
    v = std::max(v, lo + 1);
    lo = v;
  }
  std::int64_t hi = m_;
  for (std::size_t j = w.size(); j-- > 0;) {
    w[j] = std::min(w[j], hi - 1);
    hi = w[j];
  }
  return w;
}

}  // namespace decay
