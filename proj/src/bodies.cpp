#include "convexsum/bodies.hpp"

#include "convexsum/convex_ops.hpp"
#include "convexsum/hull.hpp"

namespace convexsum {

template <ExactField T>
VPolytope<T>::VPolytope(const PointMatrix<T>& points) {
  if (points.cols() == 0) throw std::invalid_argument("VPolytope: empty vertex list");
  HullResult<T> h = convex_hull(points);
  vertices_.resize(points.rows(), static_cast<Index>(h.extreme.size()));
  for (std::size_t i = 0; i < h.extreme.size(); ++i) vertices_.col(static_cast<Index>(i)) = points.col(h.extreme[i]);
  affine_dim_ = h.affine_dim;
  volume_ = std::move(h.volume);
}

template <ExactField T>
VPolytope<T> VPolytope<T>::from_canonical(PointMatrix<T> vertices, int affine_dim, T volume) {
  VPolytope p;
  p.vertices_ = std::move(vertices);
  p.affine_dim_ = affine_dim;
  p.volume_ = std::move(volume);
  return p;
}

template <ExactField T>
VPolytope<T> VPolytope<T>::point(const Point<T>& p) {
  PointMatrix<T> m(p.size(), 1);
  m.col(0) = p;
  return from_canonical(std::move(m), 0, T(0));
}

template <ExactField T>
VPolytope<T> VPolytope<T>::origin(int dim) {
  return point(Point<T>::Zero(dim));
}

template <ExactField T>
VPolytope<T> VPolytope<T>::segment(const Point<T>& a, const Point<T>& b) {
  PointMatrix<T> m(a.size(), 2);
  m.col(0) = a;
  m.col(1) = b;
  return VPolytope(m);
}

template <ExactField T>
VPolytope<T> VPolytope<T>::cube(int dim, const T& lo, const T& hi) {
  const Index count = Index{1} << dim;
  PointMatrix<T> m(dim, count);
  for (Index j = 0; j < count; ++j) {
    for (int i = 0; i < dim; ++i) m(i, j) = ((j >> i) & 1) ? hi : lo;
  }
  return VPolytope(m);
}

template <ExactField T>
PointSet<T>::PointSet(const PointMatrix<T>& points) : points_(sorted_unique_columns<T>(points)) {}

template <ExactField T>
int dim(const CompactSet<T>& s) {
  return std::visit(
      [](const auto& body) -> int {
        using B = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<B, BoxUnion<T>>) {
          return body.dim;
        } else if constexpr (std::is_same_v<B, PolygonUnion<T>>) {
          return 2;
        } else {
          return body.dim();
        }
      },
      s);
}

template <ExactField T>
bool is_convex(const CompactSet<T>& s) {
  return std::holds_alternative<VPolytope<T>>(s) || std::holds_alternative<Zonotope<T>>(s);
}

template <ExactField T>
VPolytope<T> to_vpolytope(const Zonotope<T>& z) {
  VPolytope<T> p = VPolytope<T>::point(z.center);
  const Point<T> zero = Point<T>::Zero(z.dim());
  for (Index g = 0; g < z.generators.cols(); ++g) {
    Point<T> gen = z.generators.col(g);
    p = minkowski_sum(p, VPolytope<T>::segment(zero, gen));
  }
  return p;
}

template class VPolytope<Rational>;
template class VPolytope<Scalar>;
template class PointSet<Rational>;
template class PointSet<Scalar>;
template int dim<Rational>(const CompactSet<Rational>&);
template int dim<Scalar>(const CompactSet<Scalar>&);
template bool is_convex<Rational>(const CompactSet<Rational>&);
template bool is_convex<Scalar>(const CompactSet<Scalar>&);
template VPolytope<Rational> to_vpolytope<Rational>(const Zonotope<Rational>&);
template VPolytope<Scalar> to_vpolytope<Scalar>(const Zonotope<Scalar>&);

}  // namespace convexsum
