#include "convexsum/convex_ops.hpp"

#include "convexsum/hull.hpp"

#include <boost/multiprecision/integer.hpp>

namespace convexsum {

namespace {

template <ExactField T>
void require_same_dim(int a, int b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

template <ExactField T>
T power(const T& x, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

template <ExactField T>
VPolytope<T> minkowski_sum(const VPolytope<T>& p, const VPolytope<T>& q) {
  require_same_dim<T>(p.dim(), q.dim(), "minkowski_sum");
  if (q.size() == 1) return translate(p, q.vertex(0));
  if (p.size() == 1) return translate(q, p.vertex(0));
  PointMatrix<T> sums(p.dim(), p.size() * q.size());
  Index c = 0;
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j = 0; j < q.size(); ++j) sums.col(c++) = p.vertices().col(i) + q.vertices().col(j);
  }
  return VPolytope<T>(sums);
}

template <ExactField T>
VPolytope<T> scale(const T& t, const VPolytope<T>& p) {
  const int s = sign(t);
  if (s < 0) throw std::invalid_argument("scale: negative factor");
  if (s == 0) return VPolytope<T>::origin(p.dim());
  PointMatrix<T> v = p.vertices() * t;
  T vol = p.affine_dim() == p.dim() ? T(p.volume() * power(t, p.dim())) : T(0);
  return VPolytope<T>::from_canonical(std::move(v), p.affine_dim(), std::move(vol));
}

template <ExactField T>
VPolytope<T> reflect(const VPolytope<T>& p) {
  // Negation reverses the lexicographic order.
  PointMatrix<T> v(p.dim(), p.size());
  for (Index i = 0; i < p.size(); ++i) v.col(p.size() - 1 - i) = -p.vertices().col(i);
  return VPolytope<T>::from_canonical(std::move(v), p.affine_dim(), p.volume());
}

template <ExactField T>
VPolytope<T> translate(const VPolytope<T>& p, const Point<T>& v) {
  require_same_dim<T>(p.dim(), static_cast<int>(v.size()), "translate");
  PointMatrix<T> m = p.vertices().colwise() + v;
  return VPolytope<T>::from_canonical(std::move(m), p.affine_dim(), p.volume());
}

template <ExactField T>
VPolytope<T> scale_sum(const std::vector<T>& coeffs, const std::vector<VPolytope<T>>& bodies) {
  if (coeffs.size() != bodies.size() || bodies.empty()) {
    throw std::invalid_argument("scale_sum: need one coefficient per body");
  }
  for (const T& t : coeffs) {
    if (sign(t) < 0) throw std::invalid_argument("scale_sum: negative coefficient");
  }
  VPolytope<T> acc = scale(coeffs[0], bodies[0]);
  for (std::size_t i = 1; i < bodies.size(); ++i) acc = minkowski_sum(acc, scale(coeffs[i], bodies[i]));
  return acc;
}

template <ExactField T>
VPolytope<T> project(const VPolytope<T>& p, const std::vector<Point<T>>& basis) {
  if (basis.empty()) throw std::invalid_argument("project: empty basis");
  std::vector<T> norms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_same_dim<T>(p.dim(), static_cast<int>(basis[i].size()), "project");
    norms.push_back(dot<T>(basis[i], basis[i]));
    if (sign(norms.back()) == 0) throw std::invalid_argument("project: zero basis vector");
    for (std::size_t j = 0; j < i; ++j) {
      if (sign(dot<T>(basis[i], basis[j])) != 0) throw std::invalid_argument("project: basis is not orthogonal");
    }
  }
  PointMatrix<T> y(static_cast<Index>(basis.size()), p.size());
  for (Index c = 0; c < p.size(); ++c) {
    Point<T> v = p.vertices().col(c);
    for (std::size_t i = 0; i < basis.size(); ++i) y(static_cast<Index>(i), c) = dot<T>(v, basis[i]) / norms[i];
  }
  return VPolytope<T>(y);
}

template <ExactField T>
T projected_volume(const VPolytope<T>& p, const std::vector<Point<T>>& basis) {
  VPolytope<T> y = project(p, basis);
  T gram(1);
  for (const auto& b : basis) gram *= dot<T>(b, b);
  Rational g;
  if constexpr (std::is_same_v<T, Rational>) {
    g = gram;
  } else {
    if (!gram.is_rational()) throw std::domain_error("projected_volume: irrational basis lengths");
    g = gram.as_rational();
  }
  auto root = exact_sqrt(g);
  if (!root) throw std::domain_error("projected_volume: basis length product has no exact square root");
  if constexpr (std::is_same_v<T, Rational>) {
    if (!root->is_rational()) throw std::domain_error("projected_volume: irrational basis lengths");
    return y.volume() * root->as_rational();
  } else {
    return y.volume() * *root;
  }
}

template <ExactField T>
T support(const VPolytope<T>& p, const Point<T>& u) {
  require_same_dim<T>(p.dim(), static_cast<int>(u.size()), "support");
  bool zero = true;
  for (Index i = 0; i < u.size(); ++i) zero = zero && sign(u[i]) == 0;
  if (zero) throw std::invalid_argument("support: zero direction");
  T best = dot<T>(p.vertex(0), u);
  for (Index i = 1; i < p.size(); ++i) {
    T v = dot<T>(p.vertex(i), u);
    if (best < v) best = std::move(v);
  }
  return best;
}

template <ExactField T>
Triangulation<T> triangulate(const VPolytope<T>& p) {
  Triangulation<T> tri;
  tri.apex = p.vertices().rowwise().sum() / T(static_cast<long long>(p.size()));
  if (p.affine_dim() < p.dim()) return tri;
  HullResult<T> h = convex_hull(p.vertices(), true);
  tri.simplices = std::move(h.facets);
  return tri;
}

template <ExactField T>
T simplex_volume(const Point<T>& apex, const PointMatrix<T>& vertices, const std::vector<Index>& simplex) {
  const Index n = apex.size();
  PointMatrix<T> m(n, n);
  for (Index j = 0; j < n; ++j) m.col(j) = vertices.col(simplex[static_cast<std::size_t>(j)]) - apex;
  // Fraction-based elimination; Eigen's pivoting LU wants abs().
  T det(1);
  for (Index c = 0; c < n; ++c) {
    Index piv = c;
    while (piv < n && sign(m(piv, c)) == 0) ++piv;
    if (piv == n) return T(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Index r = c + 1; r < n; ++r) {
      if (sign(m(r, c)) == 0) continue;
      T f = m(r, c) / m(c, c);
      for (Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  T fact(1);
  for (Index i = 2; i <= n; ++i) fact *= T(static_cast<long long>(i));
  return abs(det) / fact;
}

template <ExactField T>
VPolytope<T> direct_product(const VPolytope<T>& p, const VPolytope<T>& q) {
  const int n = p.dim() + q.dim();
  if (n > kMaxDim) throw std::invalid_argument("direct_product: dimension too large");
  // Products of lexicographically sorted lists in row-major order stay sorted.
  PointMatrix<T> v(n, p.size() * q.size());
  Index c = 0;
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j = 0; j < q.size(); ++j) {
      v.col(c).head(p.dim()) = p.vertices().col(i);
      v.col(c).tail(q.dim()) = q.vertices().col(j);
      ++c;
    }
  }
  return VPolytope<T>::from_canonical(std::move(v), p.affine_dim() + q.affine_dim(), p.volume() * q.volume());
}

template <ExactField T>
Zonotope<T> zonotope_sum(const Zonotope<T>& x, const Zonotope<T>& y) {
  require_same_dim<T>(x.dim(), y.dim(), "zonotope_sum");
  Zonotope<T> z;
  z.center = x.center + y.center;
  z.generators.resize(x.dim(), x.generators.cols() + y.generators.cols());
  z.generators << x.generators, y.generators;
  return z;
}

template <ExactField T>
PointSet<T> discrete_sumset(const PointSet<T>& s, const PointSet<T>& t) {
  require_same_dim<T>(s.dim(), t.dim(), "discrete_sumset");
  PointMatrix<T> sums(s.dim(), s.size() * t.size());
  Index c = 0;
  for (Index i = 0; i < s.size(); ++i) {
    for (Index j = 0; j < t.size(); ++j) sums.col(c++) = s.points().col(i) + t.points().col(j);
  }
  return PointSet<T>(sums);
}

std::optional<Scalar> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.sign() == 0) return Scalar(0);
  // sqrt(p/q) = sqrt(p q) / q; write p q = k s^2 with k in {1, 2, 3, 6}.
  const BigInt pq = numerator(x) * denominator(x);
  for (int k : {1, 2, 3, 6}) {
    if (pq % k != 0) continue;
    const BigInt r = pq / k;
    const BigInt s = boost::multiprecision::sqrt(r);
    if (s * s != r) continue;
    Rational coef(s, denominator(x));
    switch (k) {
      case 1:
        return Scalar(coef);
      case 2:
        return Scalar(0, coef, 0, 0);
      case 3:
        return Scalar(0, 0, coef, 0);
      default:
        return Scalar(0, 0, 0, coef);
    }
  }
  return std::nullopt;
}

#define CONVEXSUM_INSTANTIATE(T)                                                                         \
  template VPolytope<T> minkowski_sum<T>(const VPolytope<T>&, const VPolytope<T>&);                      \
  template VPolytope<T> scale<T>(const T&, const VPolytope<T>&);                                         \
  template VPolytope<T> reflect<T>(const VPolytope<T>&);                                                 \
  template VPolytope<T> translate<T>(const VPolytope<T>&, const Point<T>&);                              \
  template VPolytope<T> scale_sum<T>(const std::vector<T>&, const std::vector<VPolytope<T>>&);           \
  template VPolytope<T> project<T>(const VPolytope<T>&, const std::vector<Point<T>>&);                   \
  template T projected_volume<T>(const VPolytope<T>&, const std::vector<Point<T>>&);                     \
  template T support<T>(const VPolytope<T>&, const Point<T>&);                                           \
  template Triangulation<T> triangulate<T>(const VPolytope<T>&);                                         \
  template T simplex_volume<T>(const Point<T>&, const PointMatrix<T>&, const std::vector<Index>&);       \
  template VPolytope<T> direct_product<T>(const VPolytope<T>&, const VPolytope<T>&);                     \
  template Zonotope<T> zonotope_sum<T>(const Zonotope<T>&, const Zonotope<T>&);                          \
  template PointSet<T> discrete_sumset<T>(const PointSet<T>&, const PointSet<T>&);

CONVEXSUM_INSTANTIATE(Rational)
CONVEXSUM_INSTANTIATE(Scalar)

}  // namespace convexsum
