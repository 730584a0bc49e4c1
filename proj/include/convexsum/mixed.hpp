#pragma once

#include "convexsum/bodies.hpp"

#include <map>
#include <vector>

namespace convexsum {

/// |sum_i t_i B_i| as a homogeneous polynomial of degree n = dim.
template <ExactField T>
struct VolumePolynomial {
  int variables = 0;
  int degree = 0;
  /// Exponent vector (summing to degree) -> coefficient.
  std::map<std::vector<int>, T> coefficients;

  T evaluate(const std::vector<T>& t) const;
  /// Mixed partial derivative with respect to each variable in `vars` once.
  VolumePolynomial partial(const std::vector<int>& vars) const;
  bool nonnegative_coefficients() const;
};

/// sum over s in [m] of (-1)^(m-|s|) |B0 + sum_{i in s} B_i|.
template <ExactField T>
T alternating_sum(const VPolytope<T>& b0, const std::vector<VPolytope<T>>& bodies);

/// V(K_1[m_1], ..., K_k[m_k]) by the alternating sum over the body list
/// with each K_i repeated m_i times.  Throws std::invalid_argument unless
/// the multiplicities sum to the dimension.
template <ExactField T>
T mixed_volume(const std::vector<VPolytope<T>>& bodies, const std::vector<int>& multiplicities);

/// Same quantity read off the interpolated volume polynomial.
template <ExactField T>
T mixed_volume_interpolated(const std::vector<VPolytope<T>>& bodies, const std::vector<int>& multiplicities);

/// Fits |sum t_i B_i| through evaluations with t_1 = 1 and (t_2..t_k) on
/// the shifted principal lattice {beta + 1 : |beta| <= n}, a unisolvent
/// subset of {1..n+1}^(k-1).
template <ExactField T>
VolumePolynomial<T> volume_polynomial(const std::vector<VPolytope<T>>& bodies);

/// [V(A[n-k], B[k])] for k = 0..n.
template <ExactField T>
std::vector<T> steiner_coefficients(const VPolytope<T>& a, const VPolytope<T>& b);

/// n! / prod(alpha_i!).
Rational multinomial(const std::vector<int>& alpha);

/// All exponent vectors of length k summing to n, lexicographically descending.
std::vector<std::vector<int>> compositions(int n, int k);

}  // namespace convexsum
