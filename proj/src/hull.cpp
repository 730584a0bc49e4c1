#include "convexsum/hull.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

namespace convexsum {

namespace {

using int128 = __int128;

int sgn(int128 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
int sgn(const BigInt& x) { return x.sign(); }
int sgn(const Scalar& x) { return sign(x); }

BigInt to_big(int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt hi(static_cast<unsigned long long>(u >> 64));
  BigInt lo(static_cast<unsigned long long>(u & 0xFFFFFFFFFFFFFFFFULL));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}
const BigInt& to_big(const BigInt& x) { return x; }

Rational to_field(int128 x) { return Rational(to_big(x)); }
Rational to_field(const BigInt& x) { return Rational(x); }
const Scalar& to_field(const Scalar& x) { return x; }

template <class Num>
Num det(const std::array<std::array<Num, kMaxDim>, kMaxDim>& m, int n);

template <class Num>
Num det2(const Num& a, const Num& b, const Num& c, const Num& d) {
  return a * d - b * c;
}

// Determinant of the n x n leading block by cofactor expansion (n <= 7).
template <class Num>
Num det(const std::array<std::array<Num, kMaxDim>, kMaxDim>& m, int n) {
  if (n == 0) return Num(1);
  if (n == 1) return m[0][0];
  if (n == 2) return det2(m[0][0], m[0][1], m[1][0], m[1][1]);
  if (n == 3) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
  }
  Num acc(0);
  std::array<std::array<Num, kMaxDim>, kMaxDim> minor;
  for (int col = 0; col < n; ++col) {
    if (sgn(m[0][col]) == 0) continue;
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Num term = m[0][col] * det(minor, n - 1);
    if (col % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

// Exact Quickhull over a commutative ring with decidable sign.  Points are
// full-dimensional in R^d, d >= 2.
template <class Num>
class QuickHull {
 public:
  struct Facet {
    std::array<int, kMaxDim> verts{};
    std::array<int, kMaxDim> nbrs{};
    std::array<Num, kMaxDim> normal{};
    Num offset{};
    std::vector<int> outside;
    bool alive = true;
    int stamp = -1;
    bool visible = false;
  };

  QuickHull(int d, std::vector<Num> coords, int count)
      : d_(d), coords_(std::move(coords)), count_(count) {}

  const Num& coord(int p, int k) const { return coords_[static_cast<std::size_t>(p) * d_ + k]; }

  void run(const std::vector<int>& simplex) {
    interior_.fill(Num(0));
    for (int v : simplex) {
      for (int k = 0; k < d_; ++k) interior_[k] += coord(v, k);
    }
    // Initial simplex: one facet opposite each vertex.
    const int first = static_cast<int>(facets_.size());
    for (int skip = 0; skip <= d_; ++skip) {
      Facet f;
      int c = 0;
      for (int i = 0; i <= d_; ++i) {
        if (i != skip) f.verts[c++] = simplex[i];
      }
      set_plane(f);
      facets_.push_back(std::move(f));
    }
    // Adjacency: facet opposite simplex[a] and facet opposite simplex[b] share
    // the ridge missing both; in facet a the neighbour across the ridge lacking
    // simplex[b] is facet b.
    for (int a = 0; a <= d_; ++a) {
      Facet& f = facets_[first + a];
      for (int i = 0; i < d_; ++i) {
        const int v = f.verts[i];
        const int b = static_cast<int>(std::find(simplex.begin(), simplex.end(), v) - simplex.begin());
        f.nbrs[i] = first + b;
      }
    }
    std::vector<char> in_simplex(static_cast<std::size_t>(count_), 0);
    for (int v : simplex) in_simplex[v] = 1;
    for (int p = 0; p < count_; ++p) {
      if (in_simplex[p]) continue;
      for (int f = first; f <= first + d_; ++f) {
        if (above(facets_[f], p)) {
          facets_[f].outside.push_back(p);
          break;
        }
      }
    }
    std::vector<int> work;
    for (int f = first; f <= first + d_; ++f) {
      if (!facets_[f].outside.empty()) work.push_back(f);
    }
    int stamp = 0;
    while (!work.empty()) {
      const int fid = work.back();
      work.pop_back();
      if (!facets_[fid].alive || facets_[fid].outside.empty()) continue;
      const int eye = pick_eye(facets_[fid]);
      ++stamp;
      // Visible region by BFS over neighbours.
      std::vector<int> visible{fid};
      facets_[fid].stamp = stamp;
      facets_[fid].visible = true;
      for (std::size_t q = 0; q < visible.size(); ++q) {
        const Facet& f = facets_[visible[q]];
        for (int i = 0; i < d_; ++i) {
          Facet& g = facets_[f.nbrs[i]];
          if (g.stamp == stamp) continue;
          g.stamp = stamp;
          g.visible = above(g, eye);
          if (g.visible) visible.push_back(f.nbrs[i]);
        }
      }
      // New facets on horizon ridges.
      std::vector<int> created;
      std::map<std::array<int, kMaxDim>, std::pair<int, int>> pending;
      for (int vid : visible) {
        for (int i = 0; i < d_; ++i) {
          const int gid = facets_[vid].nbrs[i];
          if (facets_[gid].visible && facets_[gid].stamp == stamp) continue;
          Facet nf;
          int c = 0;
          for (int k = 0; k < d_; ++k) {
            if (k != i) nf.verts[c++] = facets_[vid].verts[k];
          }
          nf.verts[d_ - 1] = eye;
          nf.nbrs[d_ - 1] = gid;
          set_plane(nf);
          const int nid = static_cast<int>(facets_.size());
          Facet& g = facets_[gid];
          for (int k = 0; k < d_; ++k) {
            if (g.nbrs[k] == vid) {
              g.nbrs[k] = nid;
              break;
            }
          }
          facets_.push_back(std::move(nf));
          created.push_back(nid);
          for (int k = 0; k < d_ - 1; ++k) {
            std::array<int, kMaxDim> key;
            key.fill(-1);
            int kc = 0;
            for (int t = 0; t < d_ - 1; ++t) {
              if (t != k) key[kc++] = facets_[nid].verts[t];
            }
            std::sort(key.begin(), key.begin() + kc);
            auto it = pending.find(key);
            if (it == pending.end()) {
              pending.emplace(key, std::make_pair(nid, k));
            } else {
              facets_[nid].nbrs[k] = it->second.first;
              facets_[it->second.first].nbrs[it->second.second] = nid;
              pending.erase(it);
            }
          }
        }
      }
      // Redistribute outside points of the removed facets.
      for (int vid : visible) {
        Facet& f = facets_[vid];
        f.alive = false;
        for (int p : f.outside) {
          if (p == eye) continue;
          for (int nid : created) {
            if (above(facets_[nid], p)) {
              facets_[nid].outside.push_back(p);
              break;
            }
          }
        }
        std::vector<int>().swap(f.outside);
      }
      for (int nid : created) {
        if (!facets_[nid].outside.empty()) work.push_back(nid);
      }
    }
  }

  template <class Fn>
  void for_each_facet(Fn&& fn) const {
    for (const Facet& f : facets_) {
      if (f.alive) fn(f);
    }
  }

  int dim() const { return d_; }

 private:
  bool above(const Facet& f, int p) const { return sgn(eval(f, p)) > 0; }

  Num eval(const Facet& f, int p) const {
    Num acc = -f.offset;
    for (int k = 0; k < d_; ++k) acc += f.normal[k] * coord(p, k);
    return acc;
  }

  int pick_eye(const Facet& f) const {
    int best = f.outside.front();
    Num best_val = eval(f, best);
    for (std::size_t i = 1; i < f.outside.size(); ++i) {
      const int p = f.outside[i];
      Num v = eval(f, p);
      const int s = sgn(v - best_val);
      if (s > 0 || (s == 0 && lex_greater(p, best))) {
        best = p;
        best_val = std::move(v);
      }
    }
    return best;
  }

  bool lex_greater(int p, int q) const {
    for (int k = 0; k < d_; ++k) {
      const int s = sgn(coord(p, k) - coord(q, k));
      if (s != 0) return s > 0;
    }
    return false;
  }

  void set_plane(Facet& f) const {
    std::array<std::array<Num, kMaxDim>, kMaxDim> edges;
    for (int r = 0; r + 1 < d_; ++r) {
      for (int k = 0; k < d_; ++k) edges[r][k] = coord(f.verts[r + 1], k) - coord(f.verts[0], k);
    }
    std::array<std::array<Num, kMaxDim>, kMaxDim> minor;
    for (int j = 0; j < d_; ++j) {
      for (int r = 0; r + 1 < d_; ++r) {
        int cc = 0;
        for (int k = 0; k < d_; ++k) {
          if (k != j) minor[r][cc++] = edges[r][k];
        }
      }
      Num m = det(minor, d_ - 1);
      f.normal[j] = (j % 2 == 0) ? m : Num(-m);
    }
    f.offset = Num(0);
    for (int k = 0; k < d_; ++k) f.offset += f.normal[k] * coord(f.verts[0], k);
    Num side = Num(-f.offset) * Num(d_ + 1);
    for (int k = 0; k < d_; ++k) side += f.normal[k] * interior_[k];
    if (sgn(side) > 0) {
      for (int k = 0; k < d_; ++k) f.normal[k] = -f.normal[k];
      f.offset = -f.offset;
    }
  }

  int d_;
  std::vector<Num> coords_;
  int count_;
  std::vector<Facet> facets_;
  std::array<Num, kMaxDim> interior_{};
};

int128 abs_gcd(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Facet normal scaled to a canonical representative of its ray, so that
// coplanar pieces of a triangulated face compare equal.
std::vector<int128> primitive(const int128* n, int d) {
  int128 g = 0;
  for (int k = 0; k < d; ++k) g = abs_gcd(g, n[k]);
  std::vector<int128> out(n, n + d);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::vector<BigInt> primitive(const BigInt* n, int d) {
  BigInt g = 0;
  for (int k = 0; k < d; ++k) g = boost::multiprecision::gcd(g, n[k]);
  std::vector<BigInt> out(n, n + d);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::vector<Scalar> primitive(const Scalar* n, int d) {
  std::vector<Scalar> out(n, n + d);
  for (int k = 0; k < d; ++k) {
    if (sign(out[k]) == 0) continue;
    const Scalar lead = abs(out[k]);
    for (auto& x : out) x /= lead;
    break;
  }
  return out;
}

BigInt to_ring(int128 x) { return to_big(x); }
const BigInt& to_ring(const BigInt& x) { return x; }
const Scalar& to_ring(const Scalar& x) { return x; }

// Whether the rows span R^d.  Fraction-free elimination, one row at a time,
// stopping once d independent rows are found.
template <class Num>
bool spans(const std::vector<std::vector<Num>>& rows, int d) {
  using Ring = std::decay_t<decltype(to_ring(std::declval<Num>()))>;
  std::vector<std::vector<Ring>> basis;
  std::vector<int> pivots;
  for (const auto& r : rows) {
    std::vector<Ring> row;
    row.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) row.push_back(to_ring(r[k]));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int p = pivots[b];
      if (sign(row[p]) == 0) continue;
      const Ring f = row[p];
      const Ring g = basis[b][p];
      for (int k = 0; k < d; ++k) row[k] = row[k] * g - f * basis[b][k];
    }
    int p = 0;
    while (p < d && sign(row[p]) == 0) ++p;
    if (p == d) continue;
    basis.push_back(std::move(row));
    pivots.push_back(p);
    if (static_cast<int>(basis.size()) == d) return true;
  }
  return false;
}

// Outcome of hulling a full-dimensional cloud in R^d (d = projected dimension).
template <class Num>
struct EngineOutput {
  std::vector<int> extreme;                 // point ids
  std::vector<std::vector<int>> facets;     // simplicial facets (point ids)
  std::vector<Num> cone_heights;            // offset - normal . apex per facet, apex = point 0
  Num doubled_area{};                       // 2-D only: twice the signed area
};

template <class Num>
bool lex_less_pt(const std::vector<Num>& c, int d, int p, int q) {
  for (int k = 0; k < d; ++k) {
    const int s = sgn(c[static_cast<std::size_t>(p) * d + k] - c[static_cast<std::size_t>(q) * d + k]);
    if (s != 0) return s < 0;
  }
  return false;
}

template <class Num>
EngineOutput<Num> hull_2d(const std::vector<Num>& c, int count) {
  auto x = [&](int p) -> const Num& { return c[static_cast<std::size_t>(p) * 2]; };
  auto y = [&](int p) -> const Num& { return c[static_cast<std::size_t>(p) * 2 + 1]; };
  std::vector<int> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int p, int q) { return lex_less_pt(c, 2, p, q); });
  auto cross = [&](int o, int a, int b) {
    return (x(a) - x(o)) * (y(b) - y(o)) - (y(a) - y(o)) * (x(b) - x(o));
  };
  std::vector<int> h(2 * order.size());
  std::size_t k = 0;
  for (int p : order) {
    while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], p)) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = order.size() - 1, t = k + 1; i-- > 0;) {
    const int p = order[i];
    while (k >= t && sgn(cross(h[k - 2], h[k - 1], p)) <= 0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  EngineOutput<Num> out;
  out.extreme = h;
  out.doubled_area = Num(0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const int a = h[i];
    const int b = h[(i + 1) % h.size()];
    out.facets.push_back({a, b});
    out.doubled_area += x(a) * y(b) - x(b) * y(a);
  }
  return out;
}

template <class Num>
EngineOutput<Num> hull_nd(int d, std::vector<Num> c, int count, const std::vector<int>& simplex, bool want_facets) {
  QuickHull<Num> qh(d, std::move(c), count);
  qh.run(simplex);
  EngineOutput<Num> out;
  std::unordered_map<int, std::vector<const typename QuickHull<Num>::Facet*>> incident;
  qh.for_each_facet([&](const auto& f) {
    Num h = f.offset;
    for (int k = 0; k < d; ++k) h -= f.normal[k] * qh.coord(0, k);
    out.cone_heights.push_back(std::move(h));
    if (want_facets) out.facets.emplace_back(f.verts.begin(), f.verts.begin() + d);
    for (int i = 0; i < d; ++i) incident[f.verts[i]].push_back(&f);
  });
  for (auto& [v, fs] : incident) {
    // A boundary vertex is extreme iff its incident facet normals span R^d.
    bool extreme = false;
    if (static_cast<int>(fs.size()) >= d) {
      std::vector<std::vector<Num>> normals;
      normals.reserve(fs.size());
      for (const auto* f : fs) normals.push_back(primitive(f->normal.data(), d));
      std::sort(normals.begin(), normals.end());
      normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
      if (static_cast<int>(normals.size()) >= d) extreme = spans(normals, d);
    }
    if (extreme) out.extreme.push_back(v);
  }
  return out;
}

template <ExactField T>
AffineSpan affine_span_impl(const PointMatrix<T>& pts) {
  AffineSpan span;
  const int n = static_cast<int>(pts.rows());
  if (pts.cols() == 0) throw std::invalid_argument("affine_span: empty point set");
  span.basis.push_back(0);
  std::vector<std::vector<T>> rows;
  std::vector<int> pivots;
  for (Index i = 1; i < pts.cols() && static_cast<int>(rows.size()) < n; ++i) {
    std::vector<T> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) r[k] = pts(k, i) - pts(k, 0);
    for (std::size_t b = 0; b < rows.size(); ++b) {
      const int pc = pivots[b];
      if (sign(r[pc]) == 0) continue;
      T factor = r[pc];
      for (int k = 0; k < n; ++k) r[k] -= factor * rows[b][k];
    }
    int pc = -1;
    for (int k = 0; k < n; ++k) {
      if (sign(r[k]) != 0) {
        pc = k;
        break;
      }
    }
    if (pc < 0) continue;
    T inv = T(1) / r[pc];
    for (int k = 0; k < n; ++k) r[k] *= inv;
    rows.push_back(std::move(r));
    pivots.push_back(pc);
    span.basis.push_back(i);
  }
  span.dim = static_cast<int>(rows.size());
  span.coords = pivots;
  std::sort(span.coords.begin(), span.coords.end());
  return span;
}

// Maximum coordinate magnitude for which the Quickhull predicates of a d-dim
// hull stay within 127 bits (coordinates are shifted to be non-negative).
int128 int128_limit(int d) {
  switch (d) {
    case 1:
    case 2:
      return int128(1) << 48;
    case 3:
      return int128(1) << 38;
    case 4:
      return int128(1) << 28;
    default:
      return 0;
  }
}

template <class Num, ExactField T>
void finish(const EngineOutput<Num>& eng, const std::vector<Index>& ids, int d, int n, const T& scale,
            bool want_facets, HullResult<T>& out) {
  for (int v : eng.extreme) out.extreme.push_back(ids[v]);
  if (d == n) {
    if (d == 2) {
      out.volume = T(to_field(eng.doubled_area)) / T(2) * scale;
    } else {
      if constexpr (std::is_same_v<Num, Scalar>) {
        Scalar acc(0);
        for (const auto& h : eng.cone_heights) acc += h;
        out.volume = T(acc) / T(factorial(d)) * scale;
      } else {
        BigInt acc(0);
        for (const auto& h : eng.cone_heights) acc += to_big(h);
        out.volume = T(to_field(acc)) / T(factorial(d)) * scale;
      }
    }
    if (want_facets) {
      for (const auto& f : eng.facets) {
        std::vector<Index> fi;
        for (int v : f) fi.push_back(ids[v]);
        out.facets.push_back(std::move(fi));
      }
    }
  }
}

template <ExactField T>
HullResult<T> hull_impl(const PointMatrix<T>& pts, bool want_facets) {
  HullResult<T> out;
  const int n = static_cast<int>(pts.rows());
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("convex_hull: unsupported dimension");
  if (pts.cols() == 0) throw std::invalid_argument("convex_hull: empty point set");
  const AffineSpan span = affine_span_impl(pts);
  const int d = span.dim;
  out.affine_dim = d;
  if (d == 0) {
    out.extreme.push_back(0);
    return out;
  }
  const int count = static_cast<int>(pts.cols());
  std::vector<Index> ids(static_cast<std::size_t>(count));
  std::iota(ids.begin(), ids.end(), Index{0});
  if (d == 1) {
    const int c = span.coords[0];
    Index lo = 0;
    Index hi = 0;
    for (Index i = 1; i < pts.cols(); ++i) {
      if (pts(c, i) < pts(c, lo)) lo = i;
      if (pts(c, hi) < pts(c, i)) hi = i;
    }
    out.extreme = {lo, hi};
    if (n == 1) {
      out.volume = pts(0, hi) - pts(0, lo);
      if (want_facets) out.facets = {{lo}, {hi}};
    }
    if (lex_less_col<T>(pts, hi, lo)) std::swap(out.extreme[0], out.extreme[1]);
    return out;
  }
  std::vector<int> simplex(span.basis.begin(), span.basis.end());

  if constexpr (std::is_same_v<T, Rational>) {
    // Scale to a common denominator and shift to non-negative integers.
    BigInt den(1);
    for (Index i = 0; i < pts.cols(); ++i) {
      for (int c : span.coords) {
        const BigInt& q = denominator(pts(c, i));
        if (q != 1 && den % q != 0) den = boost::multiprecision::lcm(den, q);
      }
    }
    std::vector<BigInt> big(static_cast<std::size_t>(count) * d);
    std::vector<BigInt> lo(static_cast<std::size_t>(d));
    for (Index i = 0; i < pts.cols(); ++i) {
      for (int k = 0; k < d; ++k) {
        const Rational& x = pts(span.coords[k], i);
        BigInt v = numerator(x) * (den / denominator(x));
        if (i == 0 || v < lo[k]) lo[k] = v;
        big[static_cast<std::size_t>(i) * d + k] = std::move(v);
      }
    }
    BigInt maxc(0);
    for (Index i = 0; i < pts.cols(); ++i) {
      for (int k = 0; k < d; ++k) {
        BigInt& v = big[static_cast<std::size_t>(i) * d + k];
        v -= lo[k];
        if (v > maxc) maxc = v;
      }
    }
    Rational scale = d == n ? Rational(1) / pow(Rational(den), d) : Rational(0);
    const int128 limit = int128_limit(d);
    if (limit > 0 && maxc < BigInt(static_cast<long long>(limit))) {
      std::vector<int128> small(big.size());
      for (std::size_t i = 0; i < big.size(); ++i) small[i] = big[i].convert_to<long long>();
      auto eng = d == 2 ? hull_2d<int128>(small, count) : hull_nd<int128>(d, std::move(small), count, simplex, want_facets);
      finish(eng, ids, d, n, scale, want_facets, out);
    } else {
      auto eng = d == 2 ? hull_2d<BigInt>(big, count) : hull_nd<BigInt>(d, std::move(big), count, simplex, want_facets);
      finish(eng, ids, d, n, scale, want_facets, out);
    }
  } else {
    std::vector<Scalar> c(static_cast<std::size_t>(count) * d);
    for (Index i = 0; i < pts.cols(); ++i) {
      for (int k = 0; k < d; ++k) c[static_cast<std::size_t>(i) * d + k] = pts(span.coords[k], i);
    }
    auto eng = d == 2 ? hull_2d<Scalar>(c, count) : hull_nd<Scalar>(d, std::move(c), count, simplex, want_facets);
    finish(eng, ids, d, n, Scalar(1), want_facets, out);
  }
  std::sort(out.extreme.begin(), out.extreme.end(),
            [&](Index a, Index b) { return lex_less_col<T>(pts, a, b); });
  return out;
}

}  // namespace

template <ExactField T>
HullResult<T> convex_hull(const PointMatrix<T>& points, bool want_facets) {
  return hull_impl(points, want_facets);
}

template <ExactField T>
AffineSpan affine_span(const PointMatrix<T>& points) {
  return affine_span_impl(points);
}

template HullResult<Rational> convex_hull<Rational>(const PointMatrix<Rational>&, bool);
template HullResult<Scalar> convex_hull<Scalar>(const PointMatrix<Scalar>&, bool);
template AffineSpan affine_span<Rational>(const PointMatrix<Rational>&);
template AffineSpan affine_span<Scalar>(const PointMatrix<Scalar>&);

}  // namespace convexsum
