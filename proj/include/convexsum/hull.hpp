#pragma once

#include "convexsum/geometry.hpp"

#include <vector>

namespace convexsum {

/// Result of an exact convex hull computation on a point cloud.
template <ExactField T>
struct HullResult {
  /// Dimension of the affine hull of the input (0 for a single point).
  int affine_dim = 0;
  /// Input column indices of the extreme points, lexicographically sorted by
  /// coordinates, one index per distinct extreme point.
  std::vector<Index> extreme;
  /// Ambient-dimensional volume; zero unless affine_dim equals the ambient dimension.
  T volume{0};
  /// Simplicial boundary facets (input column indices), filled only when
  /// requested and the hull is full-dimensional.
  std::vector<std::vector<Index>> facets;
};

/// Exact hull of the columns of `points`.  2-D hulls use a monotone chain;
/// higher dimensions an incremental (Quickhull-style) construction with exact
/// orientation predicates.  Lower-dimensional inputs are hulled inside their
/// affine span through an affinely injective coordinate projection.
template <ExactField T>
HullResult<T> convex_hull(const PointMatrix<T>& points, bool want_facets = false);

extern template HullResult<Rational> convex_hull<Rational>(const PointMatrix<Rational>&, bool);
extern template HullResult<Scalar> convex_hull<Scalar>(const PointMatrix<Scalar>&, bool);

/// Affine rank information of a point cloud.
struct AffineSpan {
  int dim = 0;
  /// Coordinates on which the projection is injective on the affine hull.
  std::vector<int> coords;
  /// Input columns forming an affine basis (dim + 1 of them).
  std::vector<Index> basis;
};

template <ExactField T>
AffineSpan affine_span(const PointMatrix<T>& points);

extern template AffineSpan affine_span<Rational>(const PointMatrix<Rational>&);
extern template AffineSpan affine_span<Scalar>(const PointMatrix<Scalar>&);

}  // namespace convexsum
