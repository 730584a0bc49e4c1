#pragma once

#include "convexsum/checkers.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace convexsum {

/// Finite subset of Z^3 stored as x-runs per (y, z) row.  Under
/// (x, y, z) -> x + y sqrt2 + z sqrt3 it stands for a finite set of reals;
/// 1, sqrt2, sqrt3 are linearly independent over Q, so the map is injective
/// and cardinalities of sumsets can be counted on the lattice.
struct LatticeRows {
  std::map<std::pair<long, long>, std::vector<std::pair<long, long>>> rows;

  void add_run(long y, long z, long x0, long x1);
  /// Sorts and merges runs; required after add_run calls.
  void normalize();
  long long count() const;
  bool contains(long x, long y, long z) const;
};

LatticeRows lattice_sum(const LatticeRows& s, const LatticeRows& t);

/// A' = {x + y sqrt2 : 0 <= x, y < m} u {z sqrt3 : 1 <= z <= m}.
LatticeRows ruzsa_a_prime(long m);
/// B' = {x : 0 <= x <= l} u {y sqrt2 : 1 <= y <= l}.
LatticeRows ruzsa_b_prime(long l);

/// Lower bound on min |p - q| over distinct points of s: the minimum of
/// |a + b sqrt2 + c sqrt3| over the bounding box of s - s.  `realized`
/// records that the minimizer is a difference of two points of s, in which
/// case the bound is the exact minimum gap.
struct GapBound {
  Scalar gap;
  std::array<long, 3> witness{};
  bool realized = false;
};
GapBound lattice_gap(const LatticeRows& s);

struct RuzsaCounterexample {
  long m = 0;
  long l = 0;
  Rational beta;
  Rational beta_prime;
  Rational epsilon;
  GapBound gap;
  long long card_a = 0;
  long long card_ab = 0;
  long long card_bb = 0;
  long long card_abb = 0;
  /// |A| = 2 eps #A', |A+B| = 4 eps #(A'+B'), |A+B+B| = 6 eps #(A'+B'+B').
  Rational vol_a;
  Rational vol_ab;
  Rational vol_abb;
  /// lhs = |A||A+B+B|, rhs = beta |A+B|^2; a witness has pass == false.
  InequalityReport report;
};

/// Smallest l with sqrt(m+1) l >= sqrt(beta') (m+4l+1), compared squared;
/// nullopt unless m+1 > 16 beta'.
std::optional<long> ruzsa_min_l(long m, const Rational& beta_prime);

/// (m, l) minimizing m + l among pairs meeting both preconditions.
std::pair<long, long> ruzsa_parameters(const Rational& beta);

/// Builds the example for beta, with (m, l) from ruzsa_parameters unless
/// given.  Throws std::invalid_argument when given parameters violate the
/// preconditions.
RuzsaCounterexample build_ruzsa_counterexample(const Rational& beta, std::optional<long> m = std::nullopt,
                                               std::optional<long> l = std::nullopt);

/// The thickened sets as box unions on the real line (only for small m, l).
struct RuzsaThickening {
  PointSet<Scalar> a_prime;
  PointSet<Scalar> b_prime;
  BoxUnion<Scalar> a;
  BoxUnion<Scalar> b;
};
RuzsaThickening ruzsa_thickening(long m, long l, const Rational& epsilon);

/// A = [-1,1]^3 u m([-e1,e1] u [-e2,e2] u [-e3,e3]) with the arms thickened
/// to boxes of half-width w.
struct StarExample {
  long m = 0;
  Rational w;
  BoxUnion<Rational> body;
  Rational vol_a;
  Rational vol_2a;
  Rational vol_3a;
  /// lhs = |A||A+A+A|, rhs = |A+A|^2 (ratio reported).
  InequalityReport report;
};

/// Default half-width 1/m^2.
StarExample build_star_example(long m, std::optional<Rational> w = std::nullopt);

/// C(i,k) C(j,k) / C(n,k) with k = i + j - n.  Throws std::invalid_argument
/// unless 1 <= i, j <= n, i + j >= n + 1 and k = i + j - n.
Rational eval_lower_bound(int n, int i, int j, int k);

struct LowerBoundRow {
  int i = 0;
  int j = 0;
  int k = 0;
  Rational value;
};

/// All feasible (i, j, k) in lexicographic order.
std::vector<LowerBoundRow> lower_bound_table(int n);
/// Maximizer over the feasible grid; the lexicographically first on ties.
LowerBoundRow max_lower_bound(int n);

/// c_n(2n/3, 2n/3, n/3) >= (2/sqrt(pi n)) (4/3)^n for n divisible by 3, with
/// the right side replaced by a rational upper bound (lhs of the report).
InequalityReport check_lower_bound_growth(int n);

/// |A||A+B+C| <= |A+B||A+C| for A = [0,a], B = [0,b] and an interval union C.
InequalityReport interval_case_check(const Rational& a, const Rational& b, const BoxUnion<Rational>& c);

template <ExactField T>
struct Triple {
  VPolytope<T> a;
  VPolytope<T> b;
  VPolytope<T> c;
};

/// Coordinatewise direct products of two triples.
template <ExactField T>
Triple<T> tensor_triples(const Triple<T>& x, const Triple<T>& y);

}  // namespace convexsum
