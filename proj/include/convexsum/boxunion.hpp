#pragma once

#include "convexsum/bodies.hpp"

#include <vector>

namespace convexsum {

template <ExactField T>
Box<T> make_box(Point<T> lo, Point<T> hi);

/// Measure of the union (overlaps counted once), by recursive slab sweep.
template <ExactField T>
T volume(const BoxUnion<T>& u);

/// Pairwise box sums.  Throws DimensionMismatch.
template <ExactField T>
BoxUnion<T> boxunion_sum(const BoxUnion<T>& u, const BoxUnion<T>& v);

/// Interior-disjoint boxes covering the same set up to measure zero (boxes
/// of zero volume are dropped); adjacent slabs with equal cross-sections
/// are merged.
template <ExactField T>
BoxUnion<T> normalize(const BoxUnion<T>& u);

/// Closure of u minus v, as interior-disjoint boxes.
template <ExactField T>
BoxUnion<T> difference(const BoxUnion<T>& u, const BoxUnion<T>& v);

template <ExactField T>
BoxUnion<T> intersection(const BoxUnion<T>& u, const BoxUnion<T>& v);

template <ExactField T>
BoxUnion<T> reflect(const BoxUnion<T>& u);

template <ExactField T>
BoxUnion<T> translate(const BoxUnion<T>& u, const Point<T>& v);

/// Each point becomes a degenerate box.
template <ExactField T>
BoxUnion<T> to_boxunion(const PointSet<T>& s);

/// True when some box contains p.
template <ExactField T>
bool contains(const BoxUnion<T>& u, const Point<T>& p);

}  // namespace convexsum
