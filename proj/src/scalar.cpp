#include "convexsum/scalar.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>

namespace convexsum {

namespace {

// sign(x + y*sqrt(2))
int sign_q2(const Rational& x, const Rational& y) {
  const int sx = x.sign();
  const int sy = y.sign();
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const Rational diff = x * x - 2 * y * y;
  return sx * diff.sign();
}

}  // namespace

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("Scalar has irrational part: " + to_string(*this));
  return a_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational()) {
    if (o.is_rational()) {
      a_ *= o.a_;
      return *this;
    }
    Rational s = a_;
    a_ = s * o.a_;
    b_ = s * o.b_;
    c_ = s * o.c_;
    d_ = s * o.d_;
    return *this;
  }
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    c_ *= o.a_;
    d_ *= o.a_;
    return *this;
  }
  const Rational& e = o.a_;
  const Rational& f = o.b_;
  const Rational& g = o.c_;
  const Rational& h = o.d_;
  Rational na = a_ * e + 2 * b_ * f + 3 * c_ * g + 6 * d_ * h;
  Rational nb = a_ * f + b_ * e + 3 * (c_ * h + d_ * g);
  Rational nc = a_ * g + c_ * e + 2 * (b_ * h + d_ * f);
  Rational nd = a_ * h + d_ * e + b_ * g + c_ * f;
  a_ = std::move(na);
  b_ = std::move(nb);
  c_ = std::move(nc);
  d_ = std::move(nd);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_rational()) return Scalar(Rational(1) / a_);
  // x = P + Q*sqrt3; x * (P - Q*sqrt3) = u + v*sqrt2; then rationalize sqrt2.
  const Scalar conj3(a_, b_, -c_, -d_);
  const Scalar norm3 = *this * conj3;
  const Scalar conj2(norm3.a(), -norm3.b(), 0, 0);
  const Rational den = norm3.a() * norm3.a() - 2 * norm3.b() * norm3.b();
  Scalar out = conj3 * conj2;
  out.a_ /= den;
  out.b_ /= den;
  out.c_ /= den;
  out.d_ /= den;
  return out;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (o.a_.is_zero()) throw std::domain_error("Scalar: division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    c_ /= o.a_;
    d_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

int sign(const Scalar& x) {
  if (x.is_rational()) return x.a().sign();
  const int sp = sign_q2(x.a(), x.b());
  const int sq = sign_q2(x.c(), x.d());
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // P^2 - 3 Q^2 with P = a + b sqrt2, Q = c + d sqrt2
  const Rational& a = x.a();
  const Rational& b = x.b();
  const Rational& c = x.c();
  const Rational& d = x.d();
  const Rational u = a * a + 2 * b * b - 3 * c * c - 6 * d * d;
  const Rational v = 2 * a * b - 6 * c * d;
  return sp * sign_q2(u, v);
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s;
  if (x.is_rational() && y.is_rational()) {
    s = x.a() < y.a() ? -1 : (y.a() < x.a() ? 1 : 0);
  } else {
    s = sign(x - y);
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar abs(const Scalar& x) { return sign(x) < 0 ? -x : x; }

std::string to_string(const Scalar& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string out = to_string(x.a());
  out += " + " + to_string(x.b()) + "*sqrt(2)";
  out += " + " + to_string(x.c()) + "*sqrt(3)";
  out += " + " + to_string(x.d()) + "*sqrt(6)";
  return out;
}

namespace {

boost::multiprecision::mpf_float_100 approx(const Scalar& x) {
  using F = boost::multiprecision::mpf_float_100;
  F v(x.a());
  if (!x.is_rational()) {
    v += F(x.b()) * sqrt(F(2)) + F(x.c()) * sqrt(F(3)) + F(x.d()) * sqrt(F(6));
  }
  return v;
}

}  // namespace

std::string to_decimal(const Scalar& x, int digits) { return approx(x).str(digits); }

double to_double(const Scalar& x) { return approx(x).convert_to<double>(); }

}  // namespace convexsum
