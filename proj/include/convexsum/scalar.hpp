#pragma once

#include "convexsum/rational.hpp"

#include <Eigen/Core>

#include <compare>
#include <string>

namespace convexsum {

/// Exact element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of the field Q(sqrt2, sqrt3).
///
/// Closed under +, -, *, / and totally ordered through the real embedding.
/// Sign decisions reduce to two squarings, so no approximation is involved.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : a_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Scalar sqrt2() { return {0, 1, 0, 0}; }
  static Scalar sqrt3() { return {0, 0, 1, 0}; }
  static Scalar sqrt6() { return {0, 0, 0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && is_rational(); }
  /// Rational part; throws std::domain_error if an irrational coefficient is nonzero.
  const Rational& as_rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend Scalar operator-(const Scalar& x) { return {-x.a_, -x.b_, -x.c_, -x.d_}; }
  friend Scalar operator+(const Scalar& x) { return x; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  Rational a_{0};
  Rational b_{0};
  Rational c_{0};
  Rational d_{0};
};

int sign(const Scalar& x);
Scalar abs(const Scalar& x);

/// "p/q" for rational values, otherwise "a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6)".
std::string to_string(const Scalar& x);
std::string to_decimal(const Scalar& x, int digits = 12);
double to_double(const Scalar& x);

}  // namespace convexsum

namespace Eigen {

template <>
struct NumTraits<convexsum::Scalar> : GenericNumTraits<convexsum::Scalar> {
  using Real = convexsum::Scalar;
  using NonInteger = convexsum::Scalar;
  using Nested = convexsum::Scalar;
  using Literal = convexsum::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 64,
    MulCost = 256
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
