#include "convexsum/compact.hpp"

#include "convexsum/boxunion.hpp"
#include "convexsum/convex_ops.hpp"
#include "convexsum/hull.hpp"

namespace convexsum {

namespace {

template <ExactField T>
VPolytope<T> convex_part(const CompactSet<T>& x) {
  if (const auto* p = std::get_if<VPolytope<T>>(&x)) return *p;
  return to_vpolytope(std::get<Zonotope<T>>(x));
}

template <ExactField T>
std::optional<BoxUnion<T>> polytope_as_box(const VPolytope<T>& p) {
  const int n = p.dim();
  Point<T> lo = p.vertex(0);
  Point<T> hi = p.vertex(0);
  for (Index j = 1; j < p.size(); ++j) {
    for (int i = 0; i < n; ++i) {
      if (p.vertices()(i, j) < lo[i]) lo[i] = p.vertices()(i, j);
      if (hi[i] < p.vertices()(i, j)) hi[i] = p.vertices()(i, j);
    }
  }
  Index corners = 1;
  for (int i = 0; i < n; ++i) {
    if (lo[i] < hi[i]) corners *= 2;
  }
  if (corners != p.size()) return std::nullopt;
  for (Index j = 0; j < p.size(); ++j) {
    for (int i = 0; i < n; ++i) {
      const T& x = p.vertices()(i, j);
      if (!(x == lo[i]) && !(x == hi[i])) return std::nullopt;
    }
  }
  return BoxUnion<T>{n, {{lo, hi}}};
}

template <ExactField T>
std::optional<BoxUnion<T>> zonotope_as_box(const Zonotope<T>& z) {
  Point<T> lo = z.center;
  Point<T> hi = z.center;
  for (Index g = 0; g < z.generators.cols(); ++g) {
    int nonzero = 0;
    for (Index i = 0; i < z.generators.rows(); ++i) {
      const T& x = z.generators(i, g);
      const int s = sign(x);
      if (s == 0) continue;
      ++nonzero;
      if (s < 0) {
        lo[i] += x;
      } else {
        hi[i] += x;
      }
    }
    if (nonzero > 1) return std::nullopt;
  }
  return BoxUnion<T>{z.dim(), {{lo, hi}}};
}

template <ExactField T>
BoxUnion<T> interval_form(const CompactSet<T>& x) {
  if (auto b = as_boxunion(x)) return *b;
  // Every convex 1-D body is an interval, hence a box.
  VPolytope<T> p = convex_part(x);
  return BoxUnion<T>{1, {{p.vertex(0), p.vertex(p.size() - 1)}}};
}

template <ExactField T>
PolygonUnion<T> polygon_form(const CompactSet<T>& x) {
  PolygonUnion<T> u;
  std::visit(
      [&](const auto& body) {
        using B = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<B, VPolytope<T>>) {
          u.pieces.push_back(body);
        } else if constexpr (std::is_same_v<B, Zonotope<T>>) {
          u.pieces.push_back(to_vpolytope(body));
        } else if constexpr (std::is_same_v<B, PointSet<T>>) {
          for (Index i = 0; i < body.size(); ++i) u.pieces.push_back(VPolytope<T>::point(body.points().col(i)));
        } else if constexpr (std::is_same_v<B, BoxUnion<T>>) {
          for (const auto& b : body.boxes) {
            PointMatrix<T> m(2, 4);
            m << b.lo[0], b.hi[0], b.lo[0], b.hi[0], b.lo[1], b.lo[1], b.hi[1], b.hi[1];
            u.pieces.push_back(VPolytope<T>(m));
          }
        } else {
          u = body;
        }
      },
      x);
  return u;
}

template <ExactField T>
T cross(const Point<T>& o, const Point<T>& a, const Point<T>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

template <ExactField T>
void union_area_rec(const std::vector<VPolytope<T>>& pieces, std::size_t next, const VPolytope<T>& current, int depth,
                    T& total) {
  if (depth % 2 == 1) {
    total += current.volume();
  } else {
    total -= current.volume();
  }
  for (std::size_t j = next; j < pieces.size(); ++j) {
    auto inter = clip(current, pieces[j]);
    if (!inter || sign(inter->volume()) == 0) continue;
    union_area_rec(pieces, j + 1, *inter, depth + 1, total);
  }
}

}  // namespace

template <ExactField T>
std::optional<BoxUnion<T>> as_boxunion(const CompactSet<T>& x) {
  return std::visit(
      [](const auto& body) -> std::optional<BoxUnion<T>> {
        using B = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<B, BoxUnion<T>>) {
          return body;
        } else if constexpr (std::is_same_v<B, PointSet<T>>) {
          return to_boxunion(body);
        } else if constexpr (std::is_same_v<B, VPolytope<T>>) {
          return polytope_as_box(body);
        } else if constexpr (std::is_same_v<B, Zonotope<T>>) {
          return zonotope_as_box(body);
        } else {
          BoxUnion<T> out{2, {}};
          for (const auto& piece : body.pieces) {
            auto b = polytope_as_box(piece);
            if (!b) return std::nullopt;
            out.boxes.push_back(b->boxes.front());
          }
          return out;
        }
      },
      x);
}

template <ExactField T>
T measure(const CompactSet<T>& s) {
  return std::visit(
      [](const auto& body) -> T {
        using B = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<B, VPolytope<T>>) {
          return body.volume();
        } else if constexpr (std::is_same_v<B, Zonotope<T>>) {
          return to_vpolytope(body).volume();
        } else if constexpr (std::is_same_v<B, BoxUnion<T>>) {
          return volume(body);
        } else if constexpr (std::is_same_v<B, PointSet<T>>) {
          return T(0);
        } else {
          return union_area(body);
        }
      },
      s);
}

template <ExactField T>
CompactSet<T> sum(const CompactSet<T>& x, const CompactSet<T>& y) {
  const int n = dim(x);
  if (n != dim(y)) throw DimensionMismatch("sum: dimension mismatch");
  if (is_convex(x) && is_convex(y)) {
    const auto* zx = std::get_if<Zonotope<T>>(&x);
    const auto* zy = std::get_if<Zonotope<T>>(&y);
    if (zx && zy) return zonotope_sum(*zx, *zy);
    return minkowski_sum(convex_part(x), convex_part(y));
  }
  auto bx = as_boxunion(x);
  auto by = as_boxunion(y);
  if (bx && by) return boxunion_sum(*bx, *by);
  if (n == 1) return boxunion_sum(interval_form(x), interval_form(y));
  if (n == 2) {
    PolygonUnion<T> ux = polygon_form(x);
    PolygonUnion<T> uy = polygon_form(y);
    PolygonUnion<T> out;
    for (const auto& p : ux.pieces) {
      for (const auto& q : uy.pieces) out.pieces.push_back(minkowski_sum(p, q));
    }
    return out;
  }
  throw UnsupportedCombination("sum: non-convex bodies in dimension >= 3 must all be box unions");
}

template <ExactField T>
CompactSet<T> negate(const CompactSet<T>& x) {
  return std::visit(
      [](const auto& body) -> CompactSet<T> {
        using B = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<B, VPolytope<T>>) {
          return reflect(body);
        } else if constexpr (std::is_same_v<B, Zonotope<T>>) {
          return Zonotope<T>{-body.center, -body.generators};
        } else if constexpr (std::is_same_v<B, BoxUnion<T>>) {
          return reflect(body);
        } else if constexpr (std::is_same_v<B, PointSet<T>>) {
          return PointSet<T>(-body.points());
        } else {
          PolygonUnion<T> out;
          for (const auto& p : body.pieces) out.pieces.push_back(reflect(p));
          return out;
        }
      },
      x);
}

template <ExactField T>
PointMatrix<T> ccw_vertices(const VPolytope<T>& p) {
  HullResult<T> h = convex_hull(p.vertices(), true);
  PointMatrix<T> out(2, static_cast<Index>(h.facets.size()));
  for (std::size_t i = 0; i < h.facets.size(); ++i) out.col(static_cast<Index>(i)) = p.vertices().col(h.facets[i][0]);
  return out;
}

template <ExactField T>
std::optional<VPolytope<T>> clip(const VPolytope<T>& p, const VPolytope<T>& q) {
  if (p.dim() != 2 || q.dim() != 2) throw DimensionMismatch("clip: planar polygons only");
  if (p.affine_dim() < 2 || q.affine_dim() < 2) throw std::invalid_argument("clip: degenerate polygon");
  std::vector<Point<T>> poly;
  const PointMatrix<T> pv = ccw_vertices(p);
  for (Index i = 0; i < pv.cols(); ++i) poly.push_back(pv.col(i));
  const PointMatrix<T> qv = ccw_vertices(q);
  for (Index e = 0; e < qv.cols() && !poly.empty(); ++e) {
    const Point<T> a = qv.col(e);
    const Point<T> b = qv.col((e + 1) % qv.cols());
    std::vector<Point<T>> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point<T>& s = poly[i];
      const Point<T>& t = poly[(i + 1) % poly.size()];
      const T cs = cross<T>(a, b, s);
      const T ct = cross<T>(a, b, t);
      const bool s_in = sign(cs) >= 0;
      const bool t_in = sign(ct) >= 0;
      if (s_in) next.push_back(s);
      if (s_in != t_in && sign(cs) != 0 && sign(ct) != 0) {
        const T lambda = cs / (cs - ct);
        next.push_back(s + (t - s) * lambda);
      }
    }
    poly = std::move(next);
  }
  if (poly.empty()) return std::nullopt;
  PointMatrix<T> m(2, static_cast<Index>(poly.size()));
  for (std::size_t i = 0; i < poly.size(); ++i) m.col(static_cast<Index>(i)) = poly[i];
  return VPolytope<T>(m);
}

template <ExactField T>
T union_area(const PolygonUnion<T>& u) {
  std::vector<VPolytope<T>> pieces;
  for (const auto& p : u.pieces) {
    if (p.dim() != 2) throw DimensionMismatch("union_area: planar pieces only");
    if (sign(p.volume()) > 0) pieces.push_back(p);
  }
  T total(0);
  for (std::size_t i = 0; i < pieces.size(); ++i) union_area_rec(pieces, i + 1, pieces[i], 1, total);
  return total;
}

#define CONVEXSUM_INSTANTIATE(T)                                                           \
  template T measure<T>(const CompactSet<T>&);                                             \
  template CompactSet<T> sum<T>(const CompactSet<T>&, const CompactSet<T>&);               \
  template CompactSet<T> negate<T>(const CompactSet<T>&);                                  \
  template std::optional<BoxUnion<T>> as_boxunion<T>(const CompactSet<T>&);                \
  template T union_area<T>(const PolygonUnion<T>&);                                        \
  template std::optional<VPolytope<T>> clip<T>(const VPolytope<T>&, const VPolytope<T>&);  \
  template PointMatrix<T> ccw_vertices<T>(const VPolytope<T>&);

CONVEXSUM_INSTANTIATE(Rational)
CONVEXSUM_INSTANTIATE(Scalar)

}  // namespace convexsum
