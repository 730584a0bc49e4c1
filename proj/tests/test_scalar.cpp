#include "doctest.h"

#include "convexsum/scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using namespace convexsum;

namespace {

Rational random_rational(std::mt19937_64& rng, int span = 50) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(num(rng), den(rng));
}

Scalar random_scalar(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

// 100-digit evaluation of the real embedding.
int decimal_sign(const Scalar& x) {
  using F = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<110>>;
  auto q = [](const Rational& r) { return F(numerator(r)) / F(denominator(r)); };
  F v = q(x.a()) + q(x.b()) * sqrt(F(2)) + q(x.c()) * sqrt(F(3)) + q(x.d()) * sqrt(F(6));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

TEST_CASE("scalar sign examples") {
  CHECK(sign(Scalar(0, 0, 0, 0)) == 0);
  CHECK(sign(Scalar(-1, 1, 0, 0)) == 1);
  CHECK(sign(Scalar(3, 0, 0, -1)) == 1);
  CHECK(sign(Scalar(-3, 0, 0, 1)) == -1);
  // sqrt2 + sqrt3 vs sqrt(10 + 2 sqrt6): equal after squaring, so this is 0.
  Scalar s = Scalar::sqrt2() + Scalar::sqrt3();
  CHECK(sign(s * s - Scalar(5, 0, 0, 2)) == 0);
  // 5 - 2 sqrt6 > 0 but tiny.
  CHECK(sign(Scalar(5, 0, 0, -2)) == 1);
  CHECK(sign(Scalar(Rational(49, 20), 0, 0, -1)) == 1);
  CHECK(sign(Scalar(Rational(244, 100), 0, 0, -1)) == -1);
}

TEST_CASE("scalar sign agrees with decimal evaluation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Scalar x = random_scalar(rng);
    CHECK(sign(x) == decimal_sign(x));
  }
  // Near-cancelling values: (p - q sqrt2)(...) with p/q a convergent of sqrt2.
  for (auto [p, q] : {std::pair{99, 70}, {577, 408}, {3363, 2378}}) {
    Scalar x(p, -q, 0, 0);
    CHECK(sign(x) == decimal_sign(x));
    Scalar y = x * Scalar(0, 0, 1, 0) + Scalar(0, 0, 0, Rational(1, 1000000000));
    CHECK(sign(y) == decimal_sign(y));
  }
}

TEST_CASE("scalar field axioms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    Scalar x = random_scalar(rng);
    Scalar y = random_scalar(rng);
    Scalar z = random_scalar(rng);
    CHECK((x + y) * z == x * z + y * z);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Scalar(1));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("scalar strings") {
  CHECK(to_string(Scalar(Rational(-3, 6))) == "-1/2");
  CHECK(to_string(Scalar(4)) == "4/1");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::sqrt2().as_rational(), std::domain_error);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Rational r = random_rational(rng, 1000000);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("root brackets") {
  auto b = root_bracket(Rational(2), 2, Rational(1, 1000000));
  CHECK(b.lo * b.lo <= 2);
  CHECK(b.hi * b.hi >= 2);
  CHECK(b.hi - b.lo <= Rational(1, 1000000));
  auto e = root_bracket(Rational(27, 8), 3, Rational(1, 1000));
  CHECK(e.lo <= Rational(3, 2));
  CHECK(e.hi >= Rational(3, 2));
}
