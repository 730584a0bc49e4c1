#include "doctest.h"

#include "convexsum/boxunion.hpp"
#include "convexsum/compact.hpp"
#include "convexsum/convex_ops.hpp"
#include "random_bodies.hpp"

using namespace convexsum;
using namespace testing_support;

namespace {

// Inclusion-exclusion over all nonempty subsets of boxes.
Rational inclusion_exclusion(const BoxUnion<Rational>& u) {
  const std::size_t k = u.boxes.size();
  Rational total(0);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    Point<Rational> lo;
    Point<Rational> hi;
    bool first = true;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++bits;
      if (first) {
        lo = u.boxes[i].lo;
        hi = u.boxes[i].hi;
        first = false;
      } else {
        lo = lo.cwiseMax(u.boxes[i].lo);
        hi = hi.cwiseMin(u.boxes[i].hi);
      }
    }
    Rational v(1);
    for (Index d = 0; d < lo.size(); ++d) v *= hi[d] > lo[d] ? Rational(hi[d] - lo[d]) : Rational(0);
    total += bits % 2 == 1 ? v : Rational(-v);
  }
  return total;
}

BoxUnion<Rational> unit_box(int dim, const Rational& at) {
  Point<Rational> lo = Point<Rational>::Constant(dim, at);
  Point<Rational> hi = Point<Rational>::Constant(dim, at + 1);
  return {dim, {{lo, hi}}};
}

}  // namespace

TEST_CASE("box union volumes") {
  auto a = unit_box(2, 0);
  auto b = unit_box(2, 3);
  BoxUnion<Rational> ab{2, {a.boxes[0], b.boxes[0]}};
  CHECK(volume(ab) == 2);
  BoxUnion<Rational> aa{2, {a.boxes[0], a.boxes[0]}};
  CHECK(volume(aa) == 1);
  CHECK(volume(BoxUnion<Rational>{3, {}}) == 0);

  std::mt19937_64 rng(10);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 40; ++trial) {
      auto u = random_boxunion(rng, dim, 1 + static_cast<int>(rng() % 10));
      const Rational expect = inclusion_exclusion(u);
      CHECK(volume(u) == expect);
      auto n = normalize(u);
      CHECK(volume(n) == expect);
      for (std::size_t i = 0; i < n.boxes.size(); ++i) {
        for (std::size_t j = i + 1; j < n.boxes.size(); ++j) {
          CHECK(inclusion_exclusion(BoxUnion<Rational>{dim, {n.boxes[i], n.boxes[j]}}) ==
                volume(BoxUnion<Rational>{dim, {n.boxes[i]}}) + volume(BoxUnion<Rational>{dim, {n.boxes[j]}}));
        }
      }
      auto v = random_boxunion(rng, dim, 3);
      CHECK(volume(difference(u, v)) + volume(intersection(u, v)) == expect);
      CHECK(volume(boxunion_sum(u, v)) == volume(boxunion_sum(v, u)));
    }
  }
}

TEST_CASE("compact set sums") {
  // 1-D: {0,1} + [0,1] + [0,1] = [0,3].
  CompactSet<Rational> a = PointSet<Rational>(PointMatrix<Rational>{{0, 1}});
  CompactSet<Rational> b = VPolytope<Rational>::segment(point({0}), point({1}));
  CHECK(measure(sum(sum(a, b), b)) == 3);
  CHECK(measure(sum(a, b)) == 2);
  CHECK(measure(a) == 0);

  // Planar: triangle plus three points.
  CompactSet<Rational> t = polytope(2, {{0, 0}, {2, 0}, {0, 2}});
  CompactSet<Rational> pts = PointSet<Rational>(PointMatrix<Rational>{{0, 1, 5}, {0, 0, 5}});
  // Two overlapping triangles (area 2 each, overlap 1/2) and a far one.
  CHECK(measure(sum(t, pts)) == Rational(2 + 2 - Rational(1, 2) + 2));
  CHECK(std::holds_alternative<PolygonUnion<Rational>>(sum(t, pts)));

  // Box-shaped polytope with a box union stays in the box algebra.
  CompactSet<Rational> sq = VPolytope<Rational>::cube(2, 0, 1);
  std::mt19937_64 rng(1);
  CompactSet<Rational> bu = random_boxunion(rng, 2, 3);
  CHECK(std::holds_alternative<BoxUnion<Rational>>(sum(sq, bu)));

  CompactSet<Rational> cube3 = VPolytope<Rational>::cube(3, 0, 1);
  CompactSet<Rational> tet = polytope(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CompactSet<Rational> p3 = PointSet<Rational>(PointMatrix<Rational>{{0}, {0}, {1}});
  CHECK(std::holds_alternative<BoxUnion<Rational>>(sum(cube3, p3)));
  CHECK_THROWS_AS(sum(tet, p3), UnsupportedCombination);
}

TEST_CASE("polygon clipping") {
  auto sq = VPolytope<Rational>::cube(2, 0, 2);
  auto sq2 = translate(sq, point({1, 1}));
  CHECK(clip(sq, sq2)->volume() == 1);
  CHECK(!clip(sq, translate(sq, point({5, 0}))));
  CHECK(clip(sq, translate(sq, point({2, 0})))->volume() == 0);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_polytope(rng, 2, 6);
    auto q = random_polytope(rng, 2, 6);
    PolygonUnion<Rational> u{{p, q}};
    auto i = clip(p, q);
    Rational inter = i ? i->volume() : Rational(0);
    CHECK(union_area(u) == p.volume() + q.volume() - inter);
    auto j = clip(q, p);
    CHECK((j ? j->volume() : Rational(0)) == inter);
  }
}
