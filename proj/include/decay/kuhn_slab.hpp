#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace decay {

/// Freudenthal (Kuhn) triangulation of the slab S_m x [0,1], where S_m is the
/// grid {x in Z^n_+ : sum x = m} on the simplex.
///
/// Lattice points use cumulative coordinates: entries 0..n-2 hold
/// y_j = x_1 + ... + x_{j+1}, entry n-1 holds the level t in {0,1}. The slab is
/// {0 <= y_0 <= ... <= y_{n-2} <= m, 0 <= t <= 1}; every bounding hyperplane is a
/// Freudenthal hyperplane, so the slab is a union of Freudenthal n-simplices and
/// both faces t=0 and t=1 carry the Kuhn triangulation of S_m.
class KuhnSlab {
 public:
  using Point = std::vector<std::int64_t>;

  /// Vertices base + e_{perm[0]} + ... + e_{perm[k-1]} for k = 0..n.
  struct Simplex {
    Point base;
    std::vector<int> perm;
    Point vertex(std::size_t k) const;
  };

  KuhnSlab(std::size_t n, std::int64_t m);

  std::size_t dimension() const { return n_; }
  std::int64_t grid() const { return m_; }
  std::size_t level_axis() const { return n_ - 1; }

  bool contains(const Point& p) const;
  bool contains(const Simplex& s) const;

  /// Grid coordinates x (summing to m) of the simplex point under p.
  void to_grid(const Point& p, std::span<std::int64_t> x) const;
  /// Point of S_r under p.
  void to_sphere(const Point& p, double r, std::span<double> x) const;

  /// Replaces vertex k by reflection across the opposite facet. Returns the
  /// index the new vertex occupies in the result.
  static std::size_t pivot(Simplex& s, std::size_t k);

  /// Artificial labeling on the bottom face, centred at the interior grid vertex
  /// `centre` (cumulative coordinates, strictly increasing, within [1, m-1]).
  /// Label i implies x_i >= centre_i > 0, and the labeling has exactly one
  /// complete facet: the one returned by bottom_door().
  int artificial_label(const Point& p, std::span<const std::int64_t> centre) const;

  /// The n-simplex standing on the unique complete bottom facet; its vertex n
  /// is the only one on the top face.
  Simplex bottom_door(std::span<const std::int64_t> centre) const;

  /// Nearest admissible centre (strictly increasing cumulative coordinates in
  /// [1, m-1]) to the real cumulative coordinates `target`.
  std::vector<std::int64_t> admissible_centre(std::span<const double> target) const;

 private:
  std::size_t n_;
  std::int64_t m_;
};

}  // namespace decay
