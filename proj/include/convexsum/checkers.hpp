#pragma once

#include "convexsum/compact.hpp"
#include "convexsum/multiset.hpp"
#include "convexsum/report.hpp"

#include <optional>
#include <vector>

namespace convexsum {

/// Upper bound for the three-body constant c_n obtained by comparing the
/// mixed-volume expansions term by term: the largest per-term requirement
/// over j, m >= 1, j + m <= n (2(n-1)/n for j = m = 1, 1 when j + m = n,
/// min(C(n-j, m), C(n-m, j)) otherwise).  Gives 1, 4/3, 2 for n = 2, 3, 4;
/// 1 for n = 1.
Rational plunnecke_constant(int n);

/// |A+B|+|A+C| <= |A+B+C|+|A|.  Non-convex inputs go through the compact-set
/// sum and may throw UnsupportedCombination.
template <ExactField T>
InequalityReport check_supermodular3(const CompactSet<T>& a, const CompactSet<T>& b, const CompactSet<T>& c);

/// sum over I of (-1)^(m-|I|) F(s0 u U_{i in I} s_i) >= 0 with
/// F(s) = |sum_{i in s} B_i| (F of the empty set is 0).  Sets hold 0-based
/// body indices.  Throws std::invalid_argument on overlapping s_i.
template <ExactField T>
InequalityReport check_m_supermodular(const std::vector<VPolytope<T>>& bodies, Subset s0,
                                      const std::vector<Subset>& increments);

/// sum_{s in A} F(s) <= sum_{t in B} F(t) for B reachable from A by
/// elementary compressions.  Throws std::invalid_argument otherwise.
template <ExactField T>
InequalityReport check_compression(const std::vector<VPolytope<T>>& bodies, const Multiset& from,
                                   const Multiset& to);

struct FractionalPartition {
  int k = 0;
  std::vector<Subset> sets;
  std::vector<Rational> weights;

  /// Nonnegative weights with sum_{s containing i} beta(s) = 1 for each i.
  bool valid() const;
};

/// |A_1+...+A_k| >= sum_s beta(s) |sum_{j in s} A_j|.
template <ExactField T>
InequalityReport check_fractional_superadditivity(const std::vector<VPolytope<T>>& bodies,
                                                  const FractionalPartition& partition);

/// |A||A+B+C| <= c_n |A+B||A+C|.  A zero denominator gives a degenerate report.
template <ExactField T>
InequalityReport plunnecke_ratio3(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c);

/// |A|^(m-1) |A+sum B_i| <= (1+m)^n prod |A+B_i|.
template <ExactField T>
InequalityReport check_plunnecke_m(const VPolytope<T>& a, const std::vector<VPolytope<T>>& bs);

/// |A|^(m-1) |sum B_i| <= prod |A+B_i|.
template <ExactField T>
InequalityReport check_ruzsa_m(const VPolytope<T>& a, const std::vector<VPolytope<T>>& bs);

/// Fractional form over the k-subsets C_k of [m]:
/// |A+sum B|^(1/n) <= (1+m) [prod_{s in C_k} c_s]^(1/C(m-1,k-1)) |A|^(1/n),
/// compared after raising to the power n C(m-1,k-1).  Without user
/// constants c_s is the smallest admissible value (|A+sum_s B|/|A|)^(1/n).
/// User constants are listed in the order of increasing subset masks and
/// must satisfy the hypothesis (std::invalid_argument otherwise).
template <ExactField T>
InequalityReport check_fractional_plunnecke(const VPolytope<T>& a, const std::vector<VPolytope<T>>& bs, int k,
                                            const std::optional<std::vector<Rational>>& c = std::nullopt);

/// |A| V(A[n-j-m],B[j],C[m]) <= min(C(n,j),C(n,m)) V(A[n-j],B[j]) V(A[n-m],C[m]).
/// Throws std::out_of_range unless j, m >= 1 and j + m <= n.
template <ExactField T>
InequalityReport check_xiao(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c, int j, int m);

/// |A| V(A[n-2],B,C) <= 2 V(A[n-1],B) V(A[n-1],C); constant 1 when A is a simplex.
template <ExactField T>
InequalityReport check_fenchel_local(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c);

/// V(K1,K1,C...) V(K2,K2,C...) <= V(K1,K2,C...)^2 with n-2 further bodies.
template <ExactField T>
InequalityReport check_alexandrov_fenchel(const VPolytope<T>& k1, const VPolytope<T>& k2,
                                          const std::vector<VPolytope<T>>& rest);

/// (|P|^(1/n) + |Q|^(1/n))^n <= |P+Q|.  lhs is a certified rational bracket
/// end (exact = false) unless |P|/|Q| is a rational n-th power.
template <ExactField T>
InequalityReport check_brunn_minkowski(const VPolytope<T>& p, const VPolytope<T>& q);

/// |A||B-C| <= |A-C||A-B| for compact sets.
template <ExactField T>
InequalityReport check_ruzsa_triangle(const CompactSet<T>& a, const CompactSet<T>& b, const CompactSet<T>& c);

/// |A+B| <= C(2n,n)/2^n |A-B|.
template <ExactField T>
InequalityReport check_litvak(const VPolytope<T>& a, const VPolytope<T>& b);

/// |A||A+B+C| <= C(2n,n)/2^n c_n min(|A-B||A+C|, |A-B||A-C|).
template <ExactField T>
InequalityReport check_triangle_variant(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c);

/// |A-C| <= |A+C| + 2 sqrt(|A||C|) in the plane, in the equivalent rational
/// form D|D| <= 4|A||C| with D = |A-C| - |A+C|.
template <ExactField T>
InequalityReport check_planar_difference(const VPolytope<T>& a, const VPolytope<T>& c);

template <ExactField T>
struct Asymmetry {
  /// ||A+C|/|A-C| - 1|.
  T asym;
  /// (2 e^(-d(A,C)))^2 = 4|A||C| / |A-C|^2.
  T bound_squared;
  /// (|A+C| - |A-C|)^2 <= 4|A||C|, i.e. asym |A-C| <= 2 sqrt(|A||C|).
  InequalityReport report;
};

template <ExactField T>
Asymmetry<T> asymmetry(const VPolytope<T>& a, const VPolytope<T>& c);

/// |A+B+C| - |A+C| - |A+B| + |A| <= |Delta_C Delta_B (A)| with
/// Delta_B(X) = (X+B) \ X.  Requires 0 in B and 0 in C.
template <ExactField T>
InequalityReport check_delta_increment(const BoxUnion<T>& a, const BoxUnion<T>& b, const BoxUnion<T>& c);

/// Polytope P with vertices on the unit sphere and a certified inradius:
/// rB <= P <= B with r^2 = inradius_squared.
struct BallPolytope {
  VPolytope<Rational> body;
  Rational inradius_squared;
  int level = 0;
};

/// Level-l approximation of the Euclidean unit ball.  2-D: 2^l vertices at
/// rational points of the circle within 2^-11 of the angles (k+1/2) 2 pi/2^l.
/// 3-D: the poles plus 2^(l-1) latitude rings of 2^l such points each.
BallPolytope ball_polytope(int dim, int level);

/// |K+B| / |P_{u-perp}(K+B)| >= |B| / |P_{u-perp}B| with the ball replaced by
/// a BallPolytope P.  Checked as r^(2n-1) |P| |P_u(K+P)| <= |K+P| |P_u P|,
/// which the ball inequality implies; tolerance 1 - r^(2n-1) is reported.
InequalityReport check_projection_ball(const VPolytope<Rational>& k, int axis, int level);

/// |B||B+K+Z| <= |B+K||B+Z| with the ball replaced by P, checked with the
/// factor r^(-2n) on the right (tolerance r^(-2n) - 1).
InequalityReport check_zonoid_ellipsoid(const VPolytope<Rational>& k, const Zonotope<Rational>& z, int level);

}  // namespace convexsum
