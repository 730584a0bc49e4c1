#pragma once

#include "convexsum/bodies.hpp"

#include <optional>
#include <vector>

namespace convexsum {

template <ExactField T>
const T& volume(const VPolytope<T>& p) {
  return p.volume();
}

/// Canonical hull of all pairwise vertex sums.  Throws DimensionMismatch.
template <ExactField T>
VPolytope<T> minkowski_sum(const VPolytope<T>& p, const VPolytope<T>& q);

/// t * P for t >= 0 (t = 0 gives the origin).
template <ExactField T>
VPolytope<T> scale(const T& t, const VPolytope<T>& p);

/// -P, the reflection through the origin.
template <ExactField T>
VPolytope<T> reflect(const VPolytope<T>& p);

template <ExactField T>
VPolytope<T> translate(const VPolytope<T>& p, const Point<T>& v);

/// sum_i t_i K_i.  Throws std::invalid_argument on a negative coefficient.
template <ExactField T>
VPolytope<T> scale_sum(const std::vector<T>& coeffs, const std::vector<VPolytope<T>>& bodies);

/// Orthogonal projection onto span(basis), in the coordinates
/// y_i = <x, b_i> / <b_i, b_i>.  The basis must be pairwise orthogonal and
/// nonzero, otherwise std::invalid_argument.
template <ExactField T>
VPolytope<T> project(const VPolytope<T>& p, const std::vector<Point<T>>& basis);

/// m-dimensional measure of the projection onto span(basis).  Requires the
/// product of the squared basis lengths to have a square root in the field
/// (std::domain_error otherwise).
template <ExactField T>
T projected_volume(const VPolytope<T>& p, const std::vector<Point<T>>& basis);

/// max over vertices of <v, u>.  Throws std::invalid_argument for u = 0.
template <ExactField T>
T support(const VPolytope<T>& p, const Point<T>& u);

/// Cone decomposition of a full-dimensional polytope from the vertex
/// centroid: one simplex (apex + facet) per boundary facet.
template <ExactField T>
struct Triangulation {
  Point<T> apex;
  /// Each entry lists dim vertex indices; the apex completes the simplex.
  std::vector<std::vector<Index>> simplices;
};

template <ExactField T>
Triangulation<T> triangulate(const VPolytope<T>& p);

/// Unsigned volume of conv(apex, vertices[simplex]).
template <ExactField T>
T simplex_volume(const Point<T>& apex, const PointMatrix<T>& vertices, const std::vector<Index>& simplex);

/// P x Q in R^(n+m).
template <ExactField T>
VPolytope<T> direct_product(const VPolytope<T>& p, const VPolytope<T>& q);

template <ExactField T>
Zonotope<T> zonotope_sum(const Zonotope<T>& x, const Zonotope<T>& y);

template <ExactField T>
PointSet<T> discrete_sumset(const PointSet<T>& s, const PointSet<T>& t);

/// sqrt(x) when it lies in Q(sqrt2, sqrt3).
std::optional<Scalar> exact_sqrt(const Rational& x);

}  // namespace convexsum
