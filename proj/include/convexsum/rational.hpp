#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convexsum {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Thrown on malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const BigInt& x) { return x.sign(); }

/// Canonical "p/q" form: q > 0, gcd(p, q) = 1, integers keep the "/1".
std::string to_string(const Rational& x);

/// Accepts "p", "p/q", optional leading '-'. Zero denominators are rejected.
Rational parse_rational(std::string_view text);

Rational binomial(int n, int k);
Rational factorial(int n);
Rational pow(const Rational& x, int e);

/// Bracketing of x^(1/k) for x >= 0 by rationals lo <= root <= hi with
/// hi - lo <= width.  Exact (bisection on k-th powers).
struct RootBracket {
  Rational lo;
  Rational hi;
};
RootBracket root_bracket(const Rational& x, int k, const Rational& width);

/// Decimal rendering with `digits` significant digits (for plots and logs only).
std::string to_decimal(const Rational& x, int digits = 12);

double to_double(const Rational& x);

}  // namespace convexsum
