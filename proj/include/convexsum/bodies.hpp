#pragma once

#include "convexsum/geometry.hpp"

#include <variant>
#include <vector>

namespace convexsum {

/// Convex polytope given by its vertices.  Always stored canonically: the
/// extreme points only, lexicographically sorted, so equal bodies compare
/// equal.  The volume is computed once at construction.
template <ExactField T>
class VPolytope {
 public:
  VPolytope() = default;
  /// Hull of the given columns; the input may contain interior or repeated points.
  explicit VPolytope(const PointMatrix<T>& points);

  static VPolytope point(const Point<T>& p);
  static VPolytope origin(int dim);
  static VPolytope segment(const Point<T>& a, const Point<T>& b);
  static VPolytope cube(int dim, const T& lo, const T& hi);
  /// Trusted constructor: `vertices` must already be the sorted extreme points.
  static VPolytope from_canonical(PointMatrix<T> vertices, int affine_dim, T volume);

  int dim() const { return static_cast<int>(vertices_.rows()); }
  Index size() const { return vertices_.cols(); }
  const PointMatrix<T>& vertices() const { return vertices_; }
  Point<T> vertex(Index i) const { return vertices_.col(i); }
  /// Dimension of the affine hull (0 for a point).
  int affine_dim() const { return affine_dim_; }
  const T& volume() const { return volume_; }

  friend bool operator==(const VPolytope& x, const VPolytope& y) {
    return x.vertices_.rows() == y.vertices_.rows() && x.vertices_.cols() == y.vertices_.cols() &&
           x.vertices_ == y.vertices_;
  }

 private:
  PointMatrix<T> vertices_;
  int affine_dim_ = 0;
  T volume_{0};
};

/// center + sum of segments [0, g] over the generator columns.
template <ExactField T>
struct Zonotope {
  Point<T> center;
  PointMatrix<T> generators;

  int dim() const { return static_cast<int>(center.size()); }
};

template <ExactField T>
struct Box {
  Point<T> lo;
  Point<T> hi;
};

/// Finite union of closed axis-aligned boxes.  Boxes may overlap and may be
/// degenerate (a point is a box with lo == hi).
template <ExactField T>
struct BoxUnion {
  int dim = 0;
  std::vector<Box<T>> boxes;
};

/// Finite point set; stored sorted and without repeats.
template <ExactField T>
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(const PointMatrix<T>& points);

  int dim() const { return static_cast<int>(points_.rows()); }
  Index size() const { return points_.cols(); }
  const PointMatrix<T>& points() const { return points_; }

  friend bool operator==(const PointSet& x, const PointSet& y) {
    return x.points_.rows() == y.points_.rows() && x.points_.cols() == y.points_.cols() &&
           x.points_ == y.points_;
  }

 private:
  PointMatrix<T> points_;
};

/// Finite union of convex polygons in the plane (translates of a polygon by
/// a point set, and their sums).
template <ExactField T>
struct PolygonUnion {
  std::vector<VPolytope<T>> pieces;
};

/// Any body the harness can measure.
template <ExactField T>
using CompactSet = std::variant<VPolytope<T>, Zonotope<T>, BoxUnion<T>, PointSet<T>, PolygonUnion<T>>;

template <ExactField T>
int dim(const CompactSet<T>& s);

template <ExactField T>
bool is_convex(const CompactSet<T>& s);

/// Expands the zonotope into its vertex description.
template <ExactField T>
VPolytope<T> to_vpolytope(const Zonotope<T>& z);

extern template class VPolytope<Rational>;
extern template class VPolytope<Scalar>;
extern template class PointSet<Rational>;
extern template class PointSet<Scalar>;

}  // namespace convexsum
