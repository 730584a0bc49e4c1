#include "convexsum/boxunion.hpp"

#include <algorithm>

namespace convexsum {

namespace {

enum class Op { Union, Difference, Intersection };

bool keep(Op op, bool in_u, bool in_v) {
  switch (op) {
    case Op::Union:
      return in_u || in_v;
    case Op::Difference:
      return in_u && !in_v;
    default:
      return in_u && in_v;
  }
}

template <ExactField T>
std::vector<T> breakpoints(const std::vector<const Box<T>*>& u, const std::vector<const Box<T>*>& v, int axis) {
  std::vector<T> xs;
  for (const auto* list : {&u, &v}) {
    for (const Box<T>* b : *list) {
      xs.push_back(b->lo[axis]);
      xs.push_back(b->hi[axis]);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

template <ExactField T>
std::vector<const Box<T>*> active(const std::vector<const Box<T>*>& boxes, int axis, const T& a, const T& b) {
  std::vector<const Box<T>*> out;
  for (const Box<T>* box : boxes) {
    if (box->lo[axis] <= a && b <= box->hi[axis]) out.push_back(box);
  }
  return out;
}

// Suffix boxes: only coordinates >= axis are meaningful.
template <ExactField T>
struct Piece {
  std::vector<T> lo;
  std::vector<T> hi;
  friend bool operator==(const Piece& x, const Piece& y) { return x.lo == y.lo && x.hi == y.hi; }
};

template <ExactField T>
std::vector<Piece<T>> combine(const std::vector<const Box<T>*>& u, const std::vector<const Box<T>*>& v, int axis,
                              int dim, Op op) {
  std::vector<Piece<T>> out;
  const std::vector<T> xs = breakpoints(u, v, axis);
  std::vector<Piece<T>> prev_cross;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const T& a = xs[i];
    const T& b = xs[i + 1];
    auto au = active(u, axis, a, b);
    auto av = active(v, axis, a, b);
    std::vector<Piece<T>> cross;
    if (axis + 1 == dim) {
      if (keep(op, !au.empty(), !av.empty())) cross.push_back({});
    } else if (!au.empty() || !av.empty()) {
      cross = combine(au, av, axis + 1, dim, op);
    }
    // Extend the previous slab when the cross-section is unchanged.
    if (!cross.empty() && !out.empty() && cross == prev_cross && out.back().hi[0] == a) {
      for (std::size_t k = out.size() - cross.size(); k < out.size(); ++k) out[k].hi[0] = b;
      continue;
    }
    prev_cross = cross;
    for (Piece<T>& c : cross) {
      Piece<T> p;
      p.lo.reserve(c.lo.size() + 1);
      p.lo.push_back(a);
      p.lo.insert(p.lo.end(), c.lo.begin(), c.lo.end());
      p.hi.push_back(b);
      p.hi.insert(p.hi.end(), c.hi.begin(), c.hi.end());
      out.push_back(std::move(p));
    }
  }
  return out;
}

template <ExactField T>
BoxUnion<T> run(const BoxUnion<T>& u, const BoxUnion<T>& v, Op op) {
  if (u.dim != v.dim) throw DimensionMismatch("box union operation: dimension mismatch");
  std::vector<const Box<T>*> pu;
  std::vector<const Box<T>*> pv;
  for (const auto& b : u.boxes) pu.push_back(&b);
  for (const auto& b : v.boxes) pv.push_back(&b);
  BoxUnion<T> out;
  out.dim = u.dim;
  if (u.dim == 0) return out;
  for (Piece<T>& p : combine(pu, pv, 0, u.dim, op)) {
    Box<T> b;
    b.lo = Eigen::Map<Point<T>>(p.lo.data(), u.dim);
    b.hi = Eigen::Map<Point<T>>(p.hi.data(), u.dim);
    out.boxes.push_back(std::move(b));
  }
  return out;
}

template <ExactField T>
T measure(const std::vector<const Box<T>*>& boxes, int axis, int dim) {
  std::vector<T> xs;
  for (const Box<T>* b : boxes) {
    xs.push_back(b->lo[axis]);
    xs.push_back(b->hi[axis]);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  T total(0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    auto act = active(boxes, axis, xs[i], xs[i + 1]);
    if (act.empty()) continue;
    const T width = xs[i + 1] - xs[i];
    total += axis + 1 == dim ? width : T(width * measure(act, axis + 1, dim));
  }
  return total;
}

}  // namespace

template <ExactField T>
Box<T> make_box(Point<T> lo, Point<T> hi) {
  if (lo.size() != hi.size()) throw DimensionMismatch("make_box: dimension mismatch");
  for (Index i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) throw std::invalid_argument("make_box: lo > hi");
  }
  return {std::move(lo), std::move(hi)};
}

template <ExactField T>
T volume(const BoxUnion<T>& u) {
  std::vector<const Box<T>*> boxes;
  for (const auto& b : u.boxes) boxes.push_back(&b);
  if (boxes.empty() || u.dim == 0) return T(0);
  return measure(boxes, 0, u.dim);
}

template <ExactField T>
BoxUnion<T> boxunion_sum(const BoxUnion<T>& u, const BoxUnion<T>& v) {
  if (u.dim != v.dim) throw DimensionMismatch("boxunion_sum: dimension mismatch");
  BoxUnion<T> out;
  out.dim = u.dim;
  out.boxes.reserve(u.boxes.size() * v.boxes.size());
  for (const auto& a : u.boxes) {
    for (const auto& b : v.boxes) out.boxes.push_back({a.lo + b.lo, a.hi + b.hi});
  }
  return out;
}

template <ExactField T>
BoxUnion<T> normalize(const BoxUnion<T>& u) {
  return run(u, BoxUnion<T>{u.dim, {}}, Op::Union);
}

template <ExactField T>
BoxUnion<T> difference(const BoxUnion<T>& u, const BoxUnion<T>& v) {
  return run(u, v, Op::Difference);
}

template <ExactField T>
BoxUnion<T> intersection(const BoxUnion<T>& u, const BoxUnion<T>& v) {
  return run(u, v, Op::Intersection);
}

template <ExactField T>
BoxUnion<T> reflect(const BoxUnion<T>& u) {
  BoxUnion<T> out{u.dim, {}};
  for (const auto& b : u.boxes) out.boxes.push_back({-b.hi, -b.lo});
  return out;
}

template <ExactField T>
BoxUnion<T> translate(const BoxUnion<T>& u, const Point<T>& v) {
  if (v.size() != u.dim) throw DimensionMismatch("translate: dimension mismatch");
  BoxUnion<T> out{u.dim, {}};
  for (const auto& b : u.boxes) out.boxes.push_back({b.lo + v, b.hi + v});
  return out;
}

template <ExactField T>
BoxUnion<T> to_boxunion(const PointSet<T>& s) {
  BoxUnion<T> out{s.dim(), {}};
  for (Index i = 0; i < s.size(); ++i) out.boxes.push_back({s.points().col(i), s.points().col(i)});
  return out;
}

template <ExactField T>
bool contains(const BoxUnion<T>& u, const Point<T>& p) {
  for (const auto& b : u.boxes) {
    bool in = true;
    for (Index i = 0; i < p.size() && in; ++i) in = b.lo[i] <= p[i] && p[i] <= b.hi[i];
    if (in) return true;
  }
  return false;
}

#define CONVEXSUM_INSTANTIATE(T)                                                   \
  template Box<T> make_box<T>(Point<T>, Point<T>);                                 \
  template T volume<T>(const BoxUnion<T>&);                                        \
  template BoxUnion<T> boxunion_sum<T>(const BoxUnion<T>&, const BoxUnion<T>&);    \
  template BoxUnion<T> normalize<T>(const BoxUnion<T>&);                           \
  template BoxUnion<T> difference<T>(const BoxUnion<T>&, const BoxUnion<T>&);      \
  template BoxUnion<T> intersection<T>(const BoxUnion<T>&, const BoxUnion<T>&);    \
  template BoxUnion<T> reflect<T>(const BoxUnion<T>&);                             \
  template BoxUnion<T> translate<T>(const BoxUnion<T>&, const Point<T>&);          \
  template BoxUnion<T> to_boxunion<T>(const PointSet<T>&);                         \
  template bool contains<T>(const BoxUnion<T>&, const Point<T>&);

CONVEXSUM_INSTANTIATE(Rational)
CONVEXSUM_INSTANTIATE(Scalar)

}  // namespace convexsum
