#include "convexsum/mixed.hpp"

#include "convexsum/convex_ops.hpp"

#include <numeric>

namespace convexsum {

namespace {

void compositions_rec(int left, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur.push_back(a);
    compositions_rec(left - a, k, cur, out);
    cur.pop_back();
  }
}

template <ExactField T>
T int_power(const T& x, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

template <ExactField T>
std::vector<T> solve(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sign(a[piv][c]) == 0) ++piv;
    if (piv == n) throw std::logic_error("volume_polynomial: singular interpolation system");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sign(a[r][c]) == 0) continue;
      T f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

template <ExactField T>
void check_query(const std::vector<VPolytope<T>>& bodies, const std::vector<int>& multiplicities) {
  if (bodies.empty() || bodies.size() != multiplicities.size()) {
    throw std::invalid_argument("mixed_volume: need one multiplicity per body");
  }
  const int n = bodies.front().dim();
  int total = 0;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (bodies[i].dim() != n) throw DimensionMismatch("mixed_volume: dimension mismatch");
    if (multiplicities[i] < 0) throw std::invalid_argument("mixed_volume: negative multiplicity");
    total += multiplicities[i];
  }
  if (total != n) throw std::invalid_argument("mixed_volume: multiplicities must sum to the dimension");
}

}  // namespace

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k == 0) return out;
  compositions_rec(n, k, cur, out);
  return out;
}

Rational multinomial(const std::vector<int>& alpha) {
  const int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  Rational r = factorial(n);
  for (int a : alpha) r /= factorial(a);
  return r;
}

template <ExactField T>
T VolumePolynomial<T>::evaluate(const std::vector<T>& t) const {
  T acc(0);
  for (const auto& [alpha, c] : coefficients) {
    T term = c;
    for (int i = 0; i < variables; ++i) term *= int_power(t[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(i)]);
    acc += term;
  }
  return acc;
}

template <ExactField T>
VolumePolynomial<T> VolumePolynomial<T>::partial(const std::vector<int>& vars) const {
  VolumePolynomial out{variables, degree - static_cast<int>(vars.size()), {}};
  for (const auto& [alpha, c] : coefficients) {
    std::vector<int> beta = alpha;
    T coef = c;
    bool zero = false;
    for (int v : vars) {
      int& e = beta[static_cast<std::size_t>(v)];
      if (e == 0) {
        zero = true;
        break;
      }
      coef *= T(e);
      --e;
    }
    if (!zero) out.coefficients[beta] += coef;
  }
  return out;
}

template <ExactField T>
bool VolumePolynomial<T>::nonnegative_coefficients() const {
  for (const auto& [alpha, c] : coefficients) {
    if (sign(c) < 0) return false;
  }
  return true;
}

template <ExactField T>
T alternating_sum(const VPolytope<T>& b0, const std::vector<VPolytope<T>>& bodies) {
  const std::size_t m = bodies.size();
  for (const auto& b : bodies) {
    if (b.dim() != b0.dim()) throw DimensionMismatch("alternating_sum: dimension mismatch");
  }
  // sums[s] = B0 + sum_{i in s} B_i, built from s minus its top bit.
  std::vector<VPolytope<T>> sums(std::size_t{1} << m);
  sums[0] = b0;
  T acc(0);
  for (std::size_t s = 0; s < sums.size(); ++s) {
    if (s > 0) {
      std::size_t top = 0;
      while ((s >> (top + 1)) != 0) ++top;
      sums[s] = minkowski_sum(sums[s & ~(std::size_t{1} << top)], bodies[top]);
    }
    const int parity = static_cast<int>(m - static_cast<std::size_t>(__builtin_popcountll(s))) % 2;
    if (parity == 0) {
      acc += sums[s].volume();
    } else {
      acc -= sums[s].volume();
    }
  }
  return acc;
}

template <ExactField T>
T mixed_volume(const std::vector<VPolytope<T>>& bodies, const std::vector<int>& multiplicities) {
  check_query(bodies, multiplicities);
  const int n = bodies.front().dim();
  std::vector<VPolytope<T>> list;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (int r = 0; r < multiplicities[i]; ++r) list.push_back(bodies[i]);
  }
  return alternating_sum(VPolytope<T>::origin(n), list) / T(factorial(n));
}

template <ExactField T>
VolumePolynomial<T> volume_polynomial(const std::vector<VPolytope<T>>& bodies) {
  if (bodies.empty()) throw std::invalid_argument("volume_polynomial: no bodies");
  const int n = bodies.front().dim();
  const int k = static_cast<int>(bodies.size());
  for (const auto& b : bodies) {
    if (b.dim() != n) throw DimensionMismatch("volume_polynomial: dimension mismatch");
  }
  const auto monomials = compositions(n, k);
  // Sample points: t_1 = 1, t_{i+1} = beta_i + 1 with |beta| <= n.
  std::vector<std::vector<int>> lattice;
  for (int total = 0; total <= n; ++total) {
    for (auto& beta : compositions(total, k - 1)) lattice.push_back(beta);
  }
  if (k == 1) lattice = {{}};
  std::vector<std::vector<T>> rows;
  std::vector<T> values;
  for (const auto& beta : lattice) {
    std::vector<T> t{T(1)};
    for (int b : beta) t.push_back(T(b + 1));
    values.push_back(scale_sum(t, bodies).volume());
    std::vector<T> row;
    for (const auto& alpha : monomials) {
      T v(1);
      for (int i = 1; i < k; ++i) v *= int_power(t[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(i)]);
      row.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  std::vector<T> coef = solve(std::move(rows), std::move(values));
  VolumePolynomial<T> poly{k, n, {}};
  for (std::size_t i = 0; i < monomials.size(); ++i) poly.coefficients[monomials[i]] = coef[i];
  return poly;
}

template <ExactField T>
T mixed_volume_interpolated(const std::vector<VPolytope<T>>& bodies, const std::vector<int>& multiplicities) {
  check_query(bodies, multiplicities);
  std::vector<VPolytope<T>> used;
  std::vector<int> alpha;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    used.push_back(bodies[i]);
    alpha.push_back(multiplicities[i]);
  }
  const VolumePolynomial<T> poly = volume_polynomial(used);
  return poly.coefficients.at(alpha) / T(multinomial(alpha));
}

template <ExactField T>
std::vector<T> steiner_coefficients(const VPolytope<T>& a, const VPolytope<T>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("steiner_coefficients: dimension mismatch");
  const int n = a.dim();
  std::vector<T> out;
  for (int k = 0; k <= n; ++k) out.push_back(mixed_volume<T>({a, b}, {n - k, k}));
  return out;
}

#define CONVEXSUM_INSTANTIATE(T)                                                                          \
  template struct VolumePolynomial<T>;                                                                    \
  template T alternating_sum<T>(const VPolytope<T>&, const std::vector<VPolytope<T>>&);                   \
  template T mixed_volume<T>(const std::vector<VPolytope<T>>&, const std::vector<int>&);                  \
  template T mixed_volume_interpolated<T>(const std::vector<VPolytope<T>>&, const std::vector<int>&);     \
  template VolumePolynomial<T> volume_polynomial<T>(const std::vector<VPolytope<T>>&);                    \
  template std::vector<T> steiner_coefficients<T>(const VPolytope<T>&, const VPolytope<T>&);

CONVEXSUM_INSTANTIATE(Rational)
CONVEXSUM_INSTANTIATE(Scalar)

}  // namespace convexsum
