#include "convexsum/random.hpp"

#include <algorithm>

namespace convexsum {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

Rational random_coordinate(std::mt19937_64& rng) {
  // Plain modulo keeps the stream identical across standard libraries.
  constexpr std::uint64_t den = std::uint64_t{1} << kRandomDenominatorBits;
  return Rational(static_cast<long long>(rng() % (den + 1)), static_cast<long long>(den));
}

namespace {

VPolytope<Rational> full_dim_hull(std::mt19937_64& rng, int dim, int k, long long* resamples) {
  for (;;) {
    PointMatrix<Rational> pts(dim, k);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < dim; ++i) pts(i, j) = random_coordinate(rng);
    }
    VPolytope<Rational> p(pts);
    if (p.affine_dim() == dim) return p;
    if (resamples) ++*resamples;
  }
}

}  // namespace

VPolytope<Rational> random_polytope(std::mt19937_64& rng, int dim, int k, long long* resamples) {
  return full_dim_hull(rng, dim, std::max(k, dim + 1), resamples);
}

VPolytope<Rational> random_simplex(std::mt19937_64& rng, int dim, long long* resamples) {
  return full_dim_hull(rng, dim, dim + 1, resamples);
}

Zonotope<Rational> random_zonotope(std::mt19937_64& rng, int dim, int generators) {
  Zonotope<Rational> z;
  z.center = Point<Rational>(dim);
  for (int i = 0; i < dim; ++i) z.center[i] = random_coordinate(rng);
  z.generators = PointMatrix<Rational>(dim, generators);
  for (int g = 0; g < generators; ++g) {
    for (int i = 0; i < dim; ++i) z.generators(i, g) = random_coordinate(rng) - Rational(1, 2);
  }
  return z;
}

BoxUnion<Rational> random_boxunion(std::mt19937_64& rng, int dim, int boxes) {
  BoxUnion<Rational> u;
  u.dim = dim;
  while (static_cast<int>(u.boxes.size()) < boxes) {
    Box<Rational> b{Point<Rational>(dim), Point<Rational>(dim)};
    bool flat = false;
    for (int i = 0; i < dim; ++i) {
      Rational x = random_coordinate(rng);
      Rational y = random_coordinate(rng);
      if (y < x) std::swap(x, y);
      flat = flat || x == y;
      b.lo[i] = x;
      b.hi[i] = y;
    }
    if (!flat) u.boxes.push_back(std::move(b));
  }
  return u;
}

}  // namespace convexsum
