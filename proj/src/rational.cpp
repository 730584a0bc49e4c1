#include "convexsum/rational.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>

namespace convexsum {

std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d.is_zero()) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  BigInt acc(1);
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return Rational(acc);
}

Rational factorial(int n) {
  BigInt acc(1);
  for (int i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

Rational pow(const Rational& x, int e) {
  if (e < 0) return Rational(1) / pow(x, -e);
  Rational result(1);
  Rational base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

RootBracket root_bracket(const Rational& x, int k, const Rational& width) {
  if (x.sign() < 0) throw std::domain_error("root_bracket: negative radicand");
  if (k <= 0) throw std::domain_error("root_bracket: non-positive root index");
  Rational lo(0);
  Rational hi = x > 1 ? x : Rational(1);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (pow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

std::string to_decimal(const Rational& x, int digits) {
  boost::multiprecision::mpf_float_100 v(x);
  return v.str(digits);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace convexsum
