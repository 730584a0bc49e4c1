#pragma once

#include "convexsum/bodies.hpp"

#include <cstdint>
#include <random>

namespace convexsum {

std::uint64_t splitmix64(std::uint64_t x);

/// Generator for sample `index` of a run seeded with `seed`; a pure function
/// of the pair, so samples can be produced in any order.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Coordinates are i / 2^16 with i uniform in [0, 2^16].
inline constexpr int kRandomDenominatorBits = 16;

Rational random_coordinate(std::mt19937_64& rng);

/// Hull of k uniform points of the unit box, resampled until full-dimensional.
/// `resamples` (if given) is incremented per rejected draw.
VPolytope<Rational> random_polytope(std::mt19937_64& rng, int dim, int k, long long* resamples = nullptr);

/// dim + 1 uniform points of the unit box, resampled until affinely independent.
VPolytope<Rational> random_simplex(std::mt19937_64& rng, int dim, long long* resamples = nullptr);

/// Center in the unit box, generators with coordinates in [-1/2, 1/2].
Zonotope<Rational> random_zonotope(std::mt19937_64& rng, int dim, int generators);

/// Union of axis boxes with corners in the unit box.  Boxes have positive
/// volume.
BoxUnion<Rational> random_boxunion(std::mt19937_64& rng, int dim, int boxes);

}  // namespace convexsum
