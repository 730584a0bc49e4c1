#pragma once

#include "convexsum/bodies.hpp"

#include <optional>
#include <stdexcept>

namespace convexsum {

/// Thrown when a sum of non-convex bodies leaves the supported algebra.
class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lebesgue measure in the ambient dimension.
template <ExactField T>
T measure(const CompactSet<T>& s);

/// Minkowski sum.  Convex + convex stays convex (zonotope + zonotope stays
/// a zonotope); boxes, points and box-shaped convex bodies sum as box
/// unions; every 1-D body is an interval union; planar mixtures become
/// polygon unions.  Anything else throws UnsupportedCombination.
template <ExactField T>
CompactSet<T> sum(const CompactSet<T>& x, const CompactSet<T>& y);

/// Reflection -X.
template <ExactField T>
CompactSet<T> negate(const CompactSet<T>& x);

/// Box form of x when x is exactly a finite union of axis boxes (box unions,
/// point sets, and axis-parallel boxes given as polytopes or zonotopes).
template <ExactField T>
std::optional<BoxUnion<T>> as_boxunion(const CompactSet<T>& x);

/// Area of a union of convex polygons by inclusion-exclusion over exact
/// pairwise clippings; subsets with empty-interior intersections are pruned.
template <ExactField T>
T union_area(const PolygonUnion<T>& u);

/// Intersection of two convex polygons (nullopt when empty).
template <ExactField T>
std::optional<VPolytope<T>> clip(const VPolytope<T>& p, const VPolytope<T>& q);

/// Vertices in counter-clockwise order (2-D, full-dimensional).
template <ExactField T>
PointMatrix<T> ccw_vertices(const VPolytope<T>& p);

}  // namespace convexsum
