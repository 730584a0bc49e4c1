#include "convexsum/io.hpp"

namespace convexsum {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string");
}

template <ExactField T>
Json coord_to_json(const T& x) {
  return scalar_to_json(to_scalar(x));
}

template <ExactField T>
Json columns_to_json(const PointMatrix<T>& m) {
  Json out = Json::array();
  for (Index c = 0; c < m.cols(); ++c) {
    Json p = Json::array();
    for (Index r = 0; r < m.rows(); ++r) p.push_back(coord_to_json(m(r, c)));
    out.push_back(std::move(p));
  }
  return out;
}

template <ExactField T>
Json point_to_json(const Point<T>& v) {
  Json p = Json::array();
  for (Index r = 0; r < v.size(); ++r) p.push_back(coord_to_json(v[r]));
  return p;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Point<Scalar> point_from_json(const Json& j, int dim) {
  if (!j.is_array()) throw ParseError("a point must be an array of coordinates");
  if (static_cast<int>(j.size()) != dim) throw DimensionMismatch("point has the wrong number of coordinates");
  Point<Scalar> p(dim);
  for (int i = 0; i < dim; ++i) p[i] = scalar_from_json(j[static_cast<std::size_t>(i)]);
  return p;
}

PointMatrix<Scalar> columns_from_json(const Json& j, int dim, bool allow_empty) {
  if (!j.is_array()) throw ParseError("expected an array of points");
  if (j.empty() && !allow_empty) throw ParseError("empty point list");
  PointMatrix<Scalar> m(dim, static_cast<Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) m.col(static_cast<Index>(c)) = point_from_json(j[c], dim);
  return m;
}

std::optional<PointMatrix<Rational>> rational_columns(const PointMatrix<Scalar>& m) {
  PointMatrix<Rational> out(m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_rational()) return std::nullopt;
      out(r, c) = m(r, c).as_rational();
    }
  }
  return out;
}

std::optional<Point<Rational>> rational_point(const Point<Scalar>& v) {
  auto m = rational_columns(PointMatrix<Scalar>(v));
  if (!m) return std::nullopt;
  return Point<Rational>(m->col(0));
}

}  // namespace

Json scalar_to_json(const Scalar& x) {
  return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"c", to_string(x.c())}, {"d", to_string(x.d())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j));
  if (!j.is_object()) throw ParseError("expected a scalar");
  for (const auto& item : j.items()) {
    if (item.key() != "a" && item.key() != "b" && item.key() != "c" && item.key() != "d") {
      throw ParseError("unknown scalar component \"" + item.key() + "\"");
    }
  }
  auto part = [&](const char* k) { return j.contains(k) ? rational_from_json(j.at(k)) : Rational(0); };
  return Scalar(part("a"), part("b"), part("c"), part("d"));
}

template <ExactField T>
Json body_to_json(const CompactSet<T>& body) {
  return std::visit(
      [](const auto& b) -> Json {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, VPolytope<T>>) {
          return Json{{"type", "vpolytope"}, {"dim", b.dim()}, {"vertices", columns_to_json<T>(b.vertices())}};
        } else if constexpr (std::is_same_v<B, Zonotope<T>>) {
          return Json{{"type", "zonotope"},
                      {"dim", b.dim()},
                      {"center", point_to_json<T>(b.center)},
                      {"generators", columns_to_json<T>(b.generators)}};
        } else if constexpr (std::is_same_v<B, BoxUnion<T>>) {
          Json boxes = Json::array();
          for (const auto& box : b.boxes) boxes.push_back({{"lo", point_to_json<T>(box.lo)}, {"hi", point_to_json<T>(box.hi)}});
          return Json{{"type", "boxunion"}, {"dim", b.dim}, {"boxes", boxes}};
        } else if constexpr (std::is_same_v<B, PointSet<T>>) {
          return Json{{"type", "pointset"}, {"dim", b.dim()}, {"points", columns_to_json<T>(b.points())}};
        } else {
          Json pieces = Json::array();
          for (const auto& p : b.pieces) pieces.push_back(body_to_json<T>(CompactSet<T>(p)));
          return Json{{"type", "polygonunion"}, {"dim", 2}, {"pieces", pieces}};
        }
      },
      body);
}

CompactSet<Scalar> body_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a body must be a JSON object");
  const Json& type = field(j, "type");
  const Json& dim_field = field(j, "dim");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  if (!dim_field.is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const int dim = dim_field.get<int>();
  if (dim < 1 || dim > kMaxDim) throw ParseError("\"dim\" out of range");
  const std::string t = type.get<std::string>();
  if (t == "vpolytope") {
    return VPolytope<Scalar>(columns_from_json(field(j, "vertices"), dim, false));
  }
  if (t == "zonotope") {
    Zonotope<Scalar> z;
    z.center = point_from_json(field(j, "center"), dim);
    z.generators = columns_from_json(field(j, "generators"), dim, true);
    return z;
  }
  if (t == "boxunion") {
    const Json& boxes = field(j, "boxes");
    if (!boxes.is_array()) throw ParseError("\"boxes\" must be an array");
    BoxUnion<Scalar> u{dim, {}};
    for (const Json& b : boxes) {
      Box<Scalar> box{point_from_json(field(b, "lo"), dim), point_from_json(field(b, "hi"), dim)};
      for (int i = 0; i < dim; ++i) {
        if (box.hi[i] < box.lo[i]) throw ParseError("box with lo > hi");
      }
      u.boxes.push_back(std::move(box));
    }
    return u;
  }
  if (t == "pointset") {
    return PointSet<Scalar>(columns_from_json(field(j, "points"), dim, false));
  }
  if (t == "polygonunion") {
    if (dim != 2) throw ParseError("polygon unions are planar");
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array()) throw ParseError("\"pieces\" must be an array");
    PolygonUnion<Scalar> u;
    for (const Json& p : pieces) {
      CompactSet<Scalar> piece = body_from_json(p);
      if (!std::holds_alternative<VPolytope<Scalar>>(piece)) throw ParseError("polygon union pieces must be polytopes");
      u.pieces.push_back(std::get<VPolytope<Scalar>>(piece));
    }
    return u;
  }
  throw ParseError("unknown body type \"" + t + "\"");
}

std::vector<CompactSet<Scalar>> bodies_from_json(const Json& j) {
  const Json& list = field(j, "bodies");
  if (!list.is_array() || list.empty()) throw ParseError("\"bodies\" must be a nonempty array");
  std::vector<CompactSet<Scalar>> out;
  for (const Json& b : list) out.push_back(body_from_json(b));
  for (const auto& b : out) {
    if (dim(b) != dim(out.front())) throw DimensionMismatch("bodies live in different dimensions");
  }
  return out;
}

std::optional<CompactSet<Rational>> to_rational(const CompactSet<Scalar>& body) {
  return std::visit(
      [](const auto& b) -> std::optional<CompactSet<Rational>> {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, VPolytope<Scalar>>) {
          auto m = rational_columns(b.vertices());
          if (!m) return std::nullopt;
          return VPolytope<Rational>::from_canonical(*m, b.affine_dim(), b.volume().as_rational());
        } else if constexpr (std::is_same_v<B, Zonotope<Scalar>>) {
          auto c = rational_point(b.center);
          auto g = rational_columns(b.generators);
          if (!c || !g) return std::nullopt;
          return Zonotope<Rational>{*c, *g};
        } else if constexpr (std::is_same_v<B, BoxUnion<Scalar>>) {
          BoxUnion<Rational> u{b.dim, {}};
          for (const auto& box : b.boxes) {
            auto lo = rational_point(box.lo);
            auto hi = rational_point(box.hi);
            if (!lo || !hi) return std::nullopt;
            u.boxes.push_back({*lo, *hi});
          }
          return u;
        } else if constexpr (std::is_same_v<B, PointSet<Scalar>>) {
          auto m = rational_columns(b.points());
          if (!m) return std::nullopt;
          return PointSet<Rational>(*m);
        } else {
          PolygonUnion<Rational> u;
          for (const auto& p : b.pieces) {
            auto m = rational_columns(p.vertices());
            if (!m) return std::nullopt;
            u.pieces.push_back(VPolytope<Rational>::from_canonical(*m, p.affine_dim(), p.volume().as_rational()));
          }
          return u;
        }
      },
      body);
}

template Json body_to_json<Rational>(const CompactSet<Rational>&);
template Json body_to_json<Scalar>(const CompactSet<Scalar>&);

}  // namespace convexsum
