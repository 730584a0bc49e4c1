#include "doctest.h"

#include "convexsum/convex_ops.hpp"
#include "convexsum/mixed.hpp"
#include "random_bodies.hpp"

using namespace convexsum;
using namespace testing_support;

TEST_CASE("mixed volume examples") {
  auto e1 = VPolytope<Rational>::segment(point({0, 0}), point({1, 0}));
  auto e2 = VPolytope<Rational>::segment(point({0, 0}), point({0, 1}));
  CHECK(mixed_volume<Rational>({e1, e2}, {1, 1}) == Rational(1, 2));
  CHECK(mixed_volume_interpolated<Rational>({e1, e2}, {1, 1}) == Rational(1, 2));
  CHECK_THROWS_AS(mixed_volume<Rational>({e1, e2}, {1, 2}), std::invalid_argument);

  auto sq = VPolytope<Rational>::cube(2, 0, 1);
  auto st = steiner_coefficients(sq, e1);
  CHECK(st == std::vector<Rational>{1, Rational(1, 2), 0});
  auto st0 = steiner_coefficients(sq, VPolytope<Rational>::origin(2));
  CHECK(st0 == std::vector<Rational>{1, 0, 0});

  std::mt19937_64 rng(31);
  for (int n = 1; n <= 4; ++n) {
    auto k = random_polytope(rng, n, 2 * n + 2);
    CHECK(mixed_volume<Rational>({k}, {n}) == k.volume());
    auto poly = volume_polynomial<Rational>({k});
    CHECK(poly.coefficients.size() == 1);
    CHECK(poly.coefficients.at({n}) == k.volume());
    auto same = steiner_coefficients(k, k);
    for (const auto& c : same) CHECK(c == k.volume());
  }
  // Square and segment: coefficients t1^2 |Q| + 2 t1 t2 V(Q, S) + t2^2 |S|.
  auto poly = volume_polynomial<Rational>({sq, e1});
  CHECK(poly.coefficients.at({2, 0}) == 1);
  CHECK(poly.coefficients.at({1, 1}) == 2 * mixed_volume<Rational>({sq, e1}, {1, 1}));
  CHECK(poly.coefficients.at({0, 2}) == 0);
}

TEST_CASE("mixed volume properties") {
  std::mt19937_64 rng(33);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<VPolytope<Rational>> b;
      for (int i = 0; i < n; ++i) b.push_back(random_polytope(rng, n, n + 2));
      std::vector<int> ones(static_cast<std::size_t>(n), 1);
      const Rational v = mixed_volume(b, ones);
      CHECK(v == mixed_volume_interpolated(b, ones));
      CHECK(alternating_sum(VPolytope<Rational>::origin(n), b) == v * factorial(n));
      // Symmetry.
      std::vector<VPolytope<Rational>> r(b.rbegin(), b.rend());
      CHECK(mixed_volume(r, ones) == v);
      // Translation invariance.
      Point<Rational> shift = Point<Rational>::Constant(n, Rational(7, 3));
      auto moved = b;
      moved[0] = translate(b[0], shift);
      CHECK(mixed_volume(moved, ones) == v);
      // Multilinearity in the first slot.
      auto l = random_polytope(rng, n, n + 2);
      const Rational lam(2, 3);
      const Rational mu(5, 4);
      auto combo = b;
      combo[0] = minkowski_sum(scale(lam, b[0]), scale(mu, l));
      auto with_l = b;
      with_l[0] = l;
      CHECK(mixed_volume(combo, ones) == lam * v + mu * mixed_volume(with_l, ones));
      // Monotonicity: b[0] is inside b[0] + (l - c) when c is a point of l.
      auto bigger = b;
      bigger[0] = minkowski_sum(b[0], translate(l, Point<Rational>(-l.vertex(0))));
      CHECK(mixed_volume(bigger, ones) >= v);
      auto poly = volume_polynomial(b);
      CHECK(poly.nonnegative_coefficients());
      std::vector<Rational> t;
      for (int i = 0; i < n; ++i) t.push_back(random_unit(rng, 8));
      CHECK(poly.evaluate(t) == scale_sum(t, b).volume());
    }
  }
  // m = n + 1 bodies: the alternating sum vanishes.
  for (int n = 1; n <= 3; ++n) {
    std::vector<VPolytope<Rational>> b;
    for (int i = 0; i <= n; ++i) b.push_back(random_polytope(rng, n, n + 2));
    auto a = random_polytope(rng, n, n + 2);
    CHECK(alternating_sum(a, b) == 0);
  }
}

TEST_CASE("polynomial partials") {
  VolumePolynomial<Rational> p{2, 2, {{{2, 0}, 1}, {{1, 1}, 3}, {{0, 2}, 2}}};
  auto d = p.partial({0, 1});
  CHECK(d.coefficients.at({0, 0}) == 3);
  auto dx = p.partial({0});
  CHECK(dx.coefficients.at({1, 0}) == 2);
  CHECK(dx.coefficients.at({0, 1}) == 3);
}
