#include "doctest.h"

#include "convexsum/boxunion.hpp"
#include "convexsum/compact.hpp"
#include "convexsum/convex_ops.hpp"
#include "oracle.hpp"
#include "random_bodies.hpp"

using namespace convexsum;
using namespace testing_support;

namespace {

std::vector<oracle::Pt> to_pts(const PointMatrix<Rational>& m) {
  std::vector<oracle::Pt> out;
  for (Index j = 0; j < m.cols(); ++j) {
    oracle::Pt p;
    for (Index i = 0; i < m.rows(); ++i) p.push_back(m(i, j));
    out.push_back(p);
  }
  return out;
}

// Zonotope volume as a sum of |det| over all n-subsets of generators.
Rational zonotope_volume_oracle(const Zonotope<Rational>& z) {
  const int n = z.dim();
  const int g = static_cast<int>(z.generators.cols());
  Rational total(0);
  std::vector<bool> mask(static_cast<std::size_t>(g), false);
  if (g < n) return total;
  std::fill(mask.begin(), mask.begin() + n, true);
  do {
    std::vector<std::vector<Rational>> m;
    for (int j = 0; j < g; ++j) {
      if (!mask[static_cast<std::size_t>(j)]) continue;
      std::vector<Rational> col;
      for (int i = 0; i < n; ++i) col.push_back(z.generators(i, j));
      m.push_back(col);
    }
    total += abs(oracle::det(m));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return total;
}

}  // namespace

TEST_CASE("canonicalize") {
  auto t = polytope(2, {{0, 0}, {1, 0}, {0, 1}, {Rational(1, 4), Rational(1, 4)}});
  CHECK(t.size() == 3);
  CHECK(t == polytope(2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(VPolytope<Rational>(t.vertices()) == t);
  auto p = VPolytope<Rational>::point(point({Rational(2, 3), 5}));
  CHECK(VPolytope<Rational>(p.vertices()) == p);
  CHECK(p.volume() == 0);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    PointMatrix<Rational> m(2, 100);
    for (int j = 0; j < 100; ++j) {
      m(0, j) = random_unit(rng, 32);
      m(1, j) = random_unit(rng, 32);
    }
    auto pts = to_pts(sorted_unique_columns<Rational>(m));
    VPolytope<Rational> c(m);
    CHECK(VPolytope<Rational>(c.vertices()) == c);
    std::vector<oracle::Pt> expect;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!oracle::in_hull_of_others_2d(pts, i)) expect.push_back(pts[i]);
    }
    std::vector<oracle::Pt> got = to_pts(c.vertices());
    CHECK(got == expect);
  }
}

TEST_CASE("volumes") {
  CHECK(VPolytope<Rational>::cube(2, 0, 1).volume() == 1);
  CHECK(polytope(2, {{0, 0}, {1, 0}, {0, 1}}).volume() == Rational(1, 2));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_polytope(rng, 3, 12);
    CHECK(p.volume() == oracle::volume(to_pts(p.vertices())));
    auto tri = triangulate(p);
    Rational s(0);
    for (const auto& simplex : tri.simplices) {
      Rational v = simplex_volume(tri.apex, p.vertices(), simplex);
      CHECK(v >= 0);
      s += v;
    }
    CHECK(s == p.volume());
    // Translation and diagonal maps.
    Point<Rational> shift = point({random_unit(rng), random_unit(rng), random_unit(rng)});
    CHECK(translate(p, shift).volume() == p.volume());
    PointMatrix<Rational> diag = p.vertices();
    diag.row(0) *= Rational(3);
    diag.row(2) *= Rational(-1, 2);
    CHECK(VPolytope<Rational>(diag).volume() == p.volume() * Rational(3, 2));
  }
}

TEST_CASE("minkowski sums") {
  auto sq = VPolytope<Rational>::cube(2, 0, 1);
  CHECK(minkowski_sum(sq, sq) == VPolytope<Rational>::cube(2, 0, 2));
  auto t = polytope(2, {{0, 0}, {1, 0}, {0, 1}});
  auto hex = minkowski_sum(t, reflect(t));
  CHECK(hex.size() == 6);
  CHECK(hex.volume() == 3);
  CHECK(hex.volume() == 6 * t.volume());
  CHECK(minkowski_sum(sq, VPolytope<Rational>::origin(2)) == sq);
  CHECK_THROWS_AS(minkowski_sum(sq, VPolytope<Rational>::origin(3)), DimensionMismatch);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_polytope(rng, 3, 6);
    auto q = random_polytope(rng, 3, 6);
    auto r = random_polytope(rng, 3, 6);
    CHECK(minkowski_sum(p, q) == minkowski_sum(q, p));
    CHECK(minkowski_sum(minkowski_sum(p, q), r) == minkowski_sum(p, minkowski_sum(q, r)));
    Point<Rational> u = point({random_unit(rng) - 1, random_unit(rng), random_unit(rng) - Rational(1, 3)});
    CHECK(support(minkowski_sum(p, q), u) == support(p, u) + support(q, u));
  }
  CHECK(support(VPolytope<Rational>::cube(3, -1, 1), point({1, 0, 0})) == 1);
  CHECK_THROWS_AS(support(sq, point({0, 0})), std::invalid_argument);
}

TEST_CASE("scale sums") {
  for (int n = 1; n <= 4; ++n) {
    auto c = scale_sum<Rational>({Rational(2)}, {VPolytope<Rational>::cube(n, 0, 1)});
    CHECK(c == VPolytope<Rational>::cube(n, 0, 2));
    CHECK(c.volume() == pow(Rational(2), n));
  }
  auto k = polytope(2, {{0, 0}, {2, 1}, {1, 3}});
  CHECK(scale_sum<Rational>({1, 1}, {k, VPolytope<Rational>::origin(2)}) == k);
  CHECK_THROWS_AS(scale_sum<Rational>({-1}, {k}), std::invalid_argument);
  // |t1 Q + t2 [0, e1]| = t1^2 + t1 t2.
  auto seg = VPolytope<Rational>::segment(point({0, 0}), point({1, 0}));
  auto sq = VPolytope<Rational>::cube(2, 0, 1);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      CHECK(scale_sum<Rational>({a, b}, {sq, seg}).volume() == Rational(a * a + a * b));
    }
  }
}

TEST_CASE("projections") {
  auto cube = VPolytope<Rational>::cube(3, 0, 1);
  CHECK(project(cube, {point({1, 0, 0}), point({0, 1, 0})}) == VPolytope<Rational>::cube(2, 0, 1));
  auto simplex = polytope(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(project(simplex, {point({1, 0, 0}), point({0, 1, 0})}) == polytope(2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK_THROWS_AS(project(cube, {point({1, 1, 0}), point({0, 1, 0})}), std::invalid_argument);
  // Projection along (1,1,1) of the unit cube is a regular hexagon of area sqrt3.
  auto area = projected_volume(VPolytope<Scalar>::cube(3, 0, 1),
                               {Point<Scalar>{{Scalar(1), Scalar(-1), Scalar(0)}},
                                Point<Scalar>{{Scalar(1), Scalar(1), Scalar(-2)}}});
  CHECK(area == Scalar::sqrt3());
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto q = random_polytope(rng, 3, 10);
    PointMatrix<Rational> sub = q.vertices().leftCols(q.size() - 1);
    VPolytope<Rational> p(sub);
    std::vector<Point<Rational>> e = {point({1, 2, 2}), point({2, -2, 1})};
    CHECK(projected_volume(p, e) <= projected_volume(q, e));
  }
}

TEST_CASE("direct products") {
  auto seg = VPolytope<Rational>::segment(point({0}), point({1}));
  CHECK(direct_product(seg, seg) == VPolytope<Rational>::cube(2, 0, 1));
  auto t = polytope(2, {{0, 0}, {2, 0}, {0, 1}});
  auto s = VPolytope<Rational>::segment(point({0}), point({3}));
  auto prism = direct_product(t, s);
  CHECK(prism.volume() == 3);
  CHECK(prism == VPolytope<Rational>(prism.vertices()));
  CHECK(prism.size() == t.size() * s.size());
}

TEST_CASE("zonotopes") {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto z = random_zonotope(rng, n, 5);
      auto p = to_vpolytope(z);
      CHECK(p.volume() == zonotope_volume_oracle(z));
      // Vertex set is contained in the expansion of all 2^g corner sums.
      PointMatrix<Rational> corners(n, 1 << 5);
      for (int mask = 0; mask < (1 << 5); ++mask) {
        Point<Rational> c = z.center;
        for (int g = 0; g < 5; ++g) {
          if (mask & (1 << g)) c += z.generators.col(g);
        }
        corners.col(mask) = c;
      }
      CHECK(VPolytope<Rational>(corners) == p);
      auto w = random_zonotope(rng, n, 3);
      CHECK(to_vpolytope(zonotope_sum(z, w)) == minkowski_sum(p, to_vpolytope(w)));
    }
  }
}

TEST_CASE("exact square roots") {
  CHECK(*exact_sqrt(Rational(9, 4)) == Scalar(Rational(3, 2)));
  CHECK(*exact_sqrt(Rational(8)) == Scalar(0, 2, 0, 0));
  CHECK(*exact_sqrt(Rational(3, 2)) == Scalar(0, 0, 0, Rational(1, 2)));
  CHECK(!exact_sqrt(Rational(5)));
}
