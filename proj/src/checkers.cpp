#include "convexsum/checkers.hpp"

#include "convexsum/boxunion.hpp"
#include "convexsum/convex_ops.hpp"
#include "convexsum/hull.hpp"
#include "convexsum/mixed.hpp"

#include <gmp.h>

#include <bit>
#include <cmath>
#include <numbers>

namespace convexsum {

namespace {

template <ExactField T>
T power(const T& x, long long e) {
  T r(1);
  for (long long i = 0; i < e; ++i) r *= x;
  return r;
}

template <ExactField T>
Json encode(const VPolytope<T>& p) {
  return body_to_json<T>(CompactSet<T>(p));
}

template <ExactField T>
Json encode_all(const std::vector<VPolytope<T>>& bodies) {
  Json out = Json::array();
  for (const auto& b : bodies) out.push_back(encode(b));
  return out;
}

template <ExactField T>
void require_dims(const std::vector<int>& dims, const char* what) {
  for (int d : dims) {
    if (d != dims.front()) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
  }
}

template <ExactField T>
VPolytope<T> subset_sum(const std::vector<VPolytope<T>>& bodies, Subset s) {
  VPolytope<T> acc = VPolytope<T>::origin(bodies.front().dim());
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if ((s >> i) & 1u) acc = minkowski_sum(acc, bodies[i]);
  }
  return acc;
}

template <ExactField T>
VPolytope<T> sum_all(const std::vector<VPolytope<T>>& bodies) {
  VPolytope<T> acc = VPolytope<T>::origin(bodies.front().dim());
  for (const auto& b : bodies) acc = minkowski_sum(acc, b);
  return acc;
}

template <ExactField T>
void require_bodies_fit(const std::vector<VPolytope<T>>& bodies, Subset s, const char* what) {
  if (bodies.size() < 32 && (s >> bodies.size()) != 0) {
    throw std::invalid_argument(std::string(what) + ": subset refers to a missing body");
  }
}

template <ExactField T>
Rational to_rat(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return x;
  } else {
    return x.as_rational();
  }
}

template <ExactField T>
bool is_simplex(const VPolytope<T>& a) {
  return a.affine_dim() == a.dim() && a.size() == a.dim() + 1;
}

std::optional<Rational> exact_root(const Rational& x, int n) {
  BigInt p;
  BigInt q;
  if (mpz_root(p.backend().data(), numerator(x).backend().data(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  if (mpz_root(q.backend().data(), denominator(x).backend().data(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  return Rational(p, q);
}

Rational litvak_constant(int n) { return binomial(2 * n, n) / pow(Rational(2), n); }

}  // namespace

Rational plunnecke_constant(int n) {
  Rational best(1);
  for (int j = 1; j < n; ++j) {
    for (int m = 1; j + m <= n; ++m) {
      Rational need;
      if (j + m == n) {
        need = 1;
      } else if (j == 1 && m == 1) {
        need = Rational(2 * (n - 1), n);
      } else {
        need = std::min(binomial(n - j, m), binomial(n - m, j));
      }
      if (best < need) best = need;
    }
  }
  return best;
}

template <ExactField T>
InequalityReport check_supermodular3(const CompactSet<T>& a, const CompactSet<T>& b, const CompactSet<T>& c) {
  require_dims<T>({dim(a), dim(b), dim(c)}, "supermodular3");
  InequalityReport r;
  r.id = "supermodular3";
  r.dim = dim(a);
  r.bodies = Json::array({body_to_json(a), body_to_json(b), body_to_json(c)});
  const CompactSet<T> ab = sum(a, b);
  const CompactSet<T> ac = sum(a, c);
  const CompactSet<T> abc = sum(ab, c);
  r.lhs = to_scalar(measure(ab) + measure(ac));
  r.rhs = to_scalar(measure(abc) + measure(a));
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_m_supermodular(const std::vector<VPolytope<T>>& bodies, Subset s0,
                                      const std::vector<Subset>& increments) {
  if (bodies.empty() || increments.empty()) throw std::invalid_argument("m_supermodular: need bodies and increments");
  std::vector<int> dims;
  for (const auto& b : bodies) dims.push_back(b.dim());
  require_dims<T>(dims, "m_supermodular");
  require_bodies_fit(bodies, s0, "m_supermodular");
  Subset seen = 0;
  for (Subset s : increments) {
    require_bodies_fit(bodies, s, "m_supermodular");
    if (seen & s) throw std::invalid_argument("m_supermodular: increments overlap");
    seen |= s;
  }
  const std::size_t m = increments.size();
  T positive(0);
  T negative(0);
  for (Subset pick = 0; pick < (Subset{1} << m); ++pick) {
    Subset s = s0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1u) s |= increments[i];
    }
    const T f = subset_sum(bodies, s).volume();
    if ((m - static_cast<std::size_t>(std::popcount(pick))) % 2 == 0) {
      positive += f;
    } else {
      negative += f;
    }
  }
  InequalityReport r;
  r.id = "m-supermodular";
  r.dim = bodies.front().dim();
  r.bodies = encode_all(bodies);
  r.params = Json{{"s0", s0}, {"increments", increments}};
  r.lhs = to_scalar(negative);
  r.rhs = to_scalar(positive);
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_compression(const std::vector<VPolytope<T>>& bodies, const Multiset& from,
                                   const Multiset& to) {
  for (Subset s : from) require_bodies_fit(bodies, s, "compression");
  for (Subset s : to) require_bodies_fit(bodies, s, "compression");
  if (!reachable(from, to)) throw std::invalid_argument("compression: target is not a compression of the source");
  T lhs(0);
  T rhs(0);
  for (Subset s : canonical(from)) lhs += subset_sum(bodies, s).volume();
  for (Subset s : canonical(to)) rhs += subset_sum(bodies, s).volume();
  InequalityReport r;
  r.id = "compression";
  r.dim = bodies.front().dim();
  r.bodies = encode_all(bodies);
  r.params = Json{{"from", canonical(from)}, {"to", canonical(to)}};
  r.lhs = to_scalar(lhs);
  r.rhs = to_scalar(rhs);
  settle(r);
  return r;
}

bool FractionalPartition::valid() const {
  if (k <= 0 || k > 31 || sets.size() != weights.size()) return false;
  std::vector<Rational> cover(static_cast<std::size_t>(k), Rational(0));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == 0 || (sets[i] >> k) != 0 || weights[i] < 0) return false;
    for (int e = 0; e < k; ++e) {
      if ((sets[i] >> e) & 1u) cover[static_cast<std::size_t>(e)] += weights[i];
    }
  }
  for (const Rational& c : cover) {
    if (c != 1) return false;
  }
  return true;
}

template <ExactField T>
InequalityReport check_fractional_superadditivity(const std::vector<VPolytope<T>>& bodies,
                                                  const FractionalPartition& partition) {
  if (!partition.valid() || static_cast<int>(bodies.size()) != partition.k) {
    throw std::invalid_argument("fractional_superadditivity: invalid fractional partition");
  }
  T lhs(0);
  for (std::size_t i = 0; i < partition.sets.size(); ++i) {
    lhs += T(partition.weights[i]) * subset_sum(bodies, partition.sets[i]).volume();
  }
  Json weights = Json::array();
  for (const Rational& w : partition.weights) weights.push_back(to_string(w));
  InequalityReport r;
  r.id = "fractional-superadditivity";
  r.dim = bodies.front().dim();
  r.bodies = encode_all(bodies);
  r.params = Json{{"sets", partition.sets}, {"weights", weights}};
  r.lhs = to_scalar(lhs);
  r.rhs = to_scalar(sum_all(bodies).volume());
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport plunnecke_ratio3(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c) {
  require_dims<T>({a.dim(), b.dim(), c.dim()}, "plunnecke3");
  const int n = a.dim();
  const VPolytope<T> ab = minkowski_sum(a, b);
  const VPolytope<T> ac = minkowski_sum(a, c);
  const VPolytope<T> abc = minkowski_sum(ab, c);
  const T num = a.volume() * abc.volume();
  const T den = ab.volume() * ac.volume();
  InequalityReport r;
  r.id = "plunnecke3";
  r.dim = n;
  r.bodies = Json::array({encode(a), encode(b), encode(c)});
  r.constant = Scalar(plunnecke_constant(n));
  r.params = Json{{"phi_power_decimal", to_decimal(Rational(std::pow(std::numbers::phi, n)), 8)}};
  r.lhs = to_scalar(num);
  r.rhs = r.constant * to_scalar(den);
  if (sign(den) == 0) {
    r.degenerate = true;
  } else {
    r.ratio = to_scalar(T(num / den));
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_plunnecke_m(const VPolytope<T>& a, const std::vector<VPolytope<T>>& bs) {
  if (bs.empty()) throw std::invalid_argument("plunnecke_m: need at least one summand");
  std::vector<int> dims{a.dim()};
  for (const auto& b : bs) dims.push_back(b.dim());
  require_dims<T>(dims, "plunnecke_m");
  const int n = a.dim();
  const long long m = static_cast<long long>(bs.size());
  T prod(1);
  for (const auto& b : bs) prod *= minkowski_sum(a, b).volume();
  InequalityReport r;
  r.id = "plunnecke-m";
  r.dim = n;
  r.bodies = Json::array({encode(a)});
  for (const auto& b : bs) r.bodies.push_back(encode(b));
  r.constant = Scalar(pow(Rational(1 + m), n));
  r.lhs = to_scalar(T(power(a.volume(), m - 1) * minkowski_sum(a, sum_all(bs)).volume()));
  r.rhs = r.constant * to_scalar(prod);
  if (sign(prod) == 0) {
    r.degenerate = true;
  } else {
    r.ratio = r.lhs / to_scalar(prod);
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_ruzsa_m(const VPolytope<T>& a, const std::vector<VPolytope<T>>& bs) {
  if (bs.empty()) throw std::invalid_argument("ruzsa_m: need at least one summand");
  std::vector<int> dims{a.dim()};
  for (const auto& b : bs) dims.push_back(b.dim());
  require_dims<T>(dims, "ruzsa_m");
  const long long m = static_cast<long long>(bs.size());
  T prod(1);
  for (const auto& b : bs) prod *= minkowski_sum(a, b).volume();
  InequalityReport r;
  r.id = "ruzsa-m";
  r.dim = a.dim();
  r.bodies = Json::array({encode(a)});
  for (const auto& b : bs) r.bodies.push_back(encode(b));
  r.lhs = to_scalar(T(power(a.volume(), m - 1) * sum_all(bs).volume()));
  r.rhs = to_scalar(prod);
  if (sign(prod) == 0) {
    r.degenerate = true;
  } else {
    r.ratio = r.lhs / r.rhs;
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_fractional_plunnecke(const VPolytope<T>& a, const std::vector<VPolytope<T>>& bs, int k,
                                            const std::optional<std::vector<Rational>>& c) {
  const int m = static_cast<int>(bs.size());
  if (m < 1 || m > 16 || k < 1 || k > m) throw std::out_of_range("fractional_plunnecke: need 1 <= k <= m");
  std::vector<int> dims{a.dim()};
  for (const auto& b : bs) dims.push_back(b.dim());
  require_dims<T>(dims, "fractional_plunnecke");
  const int n = a.dim();
  const long long exponent = static_cast<long long>(binomial(m - 1, k - 1).convert_to<long>());
  std::vector<Subset> family;
  for (Subset s = 0; s < (Subset{1} << m); ++s) {
    if (std::popcount(s) == k) family.push_back(s);
  }
  if (c && c->size() != family.size()) throw std::invalid_argument("fractional_plunnecke: one constant per k-subset");
  const T va = a.volume();
  T prod(1);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const T vs = minkowski_sum(a, subset_sum(bs, family[i])).volume();
    if (c) {
      const T bound = T(pow((*c)[i], n)) * va;
      if ((*c)[i] < 0 || bound < vs) throw std::invalid_argument("fractional_plunnecke: constant violates the hypothesis");
      prod *= T(pow((*c)[i], n));
    } else {
      prod *= vs;
    }
  }
  const T vall = minkowski_sum(a, sum_all(bs)).volume();
  InequalityReport r;
  r.id = "fractional-plunnecke";
  r.dim = n;
  r.bodies = Json::array({encode(a)});
  for (const auto& b : bs) r.bodies.push_back(encode(b));
  r.params = Json{{"k", k}, {"power", exponent}};
  if (c) {
    Json cs = Json::array();
    for (const Rational& x : *c) cs.push_back(to_string(x));
    r.params["c"] = cs;
  }
  r.constant = Scalar(pow(Rational(1 + m), static_cast<int>(n * exponent)));
  if (c) {
    r.lhs = to_scalar(power(vall, exponent));
    r.rhs = r.constant * to_scalar(T(prod * power(va, exponent)));
  } else {
    const long long family_size = static_cast<long long>(family.size());
    r.lhs = to_scalar(T(power(vall, exponent) * power(va, family_size)));
    r.rhs = r.constant * to_scalar(T(prod * power(va, exponent)));
    r.degenerate = sign(va) == 0;
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_xiao(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c, int j, int m) {
  require_dims<T>({a.dim(), b.dim(), c.dim()}, "xiao");
  const int n = a.dim();
  if (j < 1 || m < 1 || j + m > n) throw std::out_of_range("xiao: need j, m >= 1 and j + m <= n");
  const T mixed = mixed_volume<T>({a, b, c}, {n - j - m, j, m});
  const T vb = mixed_volume<T>({a, b}, {n - j, j});
  const T vc = mixed_volume<T>({a, c}, {n - m, m});
  InequalityReport r;
  r.id = "xiao";
  r.dim = n;
  r.bodies = Json::array({encode(a), encode(b), encode(c)});
  r.params = Json{{"j", j}, {"m", m}};
  r.constant = Scalar(std::min(binomial(n, j), binomial(n, m)));
  r.lhs = to_scalar(T(a.volume() * mixed));
  r.rhs = r.constant * to_scalar(T(vb * vc));
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_fenchel_local(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c) {
  require_dims<T>({a.dim(), b.dim(), c.dim()}, "fenchel_local");
  const int n = a.dim();
  if (n < 2) throw std::out_of_range("fenchel_local: needs dimension >= 2");
  const T mixed = mixed_volume<T>({a, b, c}, {n - 2, 1, 1});
  const T vb = mixed_volume<T>({a, b}, {n - 1, 1});
  const T vc = mixed_volume<T>({a, c}, {n - 1, 1});
  InequalityReport r;
  r.id = "fenchel-local";
  r.dim = n;
  r.bodies = Json::array({encode(a), encode(b), encode(c)});
  r.constant = Scalar(is_simplex(a) ? 1 : 2);
  r.params = Json{{"simplex", is_simplex(a)}};
  r.lhs = to_scalar(T(a.volume() * mixed));
  r.rhs = r.constant * to_scalar(T(vb * vc));
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_alexandrov_fenchel(const VPolytope<T>& k1, const VPolytope<T>& k2,
                                          const std::vector<VPolytope<T>>& rest) {
  const int n = k1.dim();
  if (n < 2 || static_cast<int>(rest.size()) != n - 2) {
    throw std::invalid_argument("alexandrov_fenchel: need exactly n-2 further bodies");
  }
  std::vector<VPolytope<T>> both{k1, k2};
  std::vector<VPolytope<T>> first{k1};
  std::vector<VPolytope<T>> second{k2};
  std::vector<int> both_mult{1, 1};
  std::vector<int> single_mult{2};
  for (const auto& b : rest) {
    both.push_back(b);
    first.push_back(b);
    second.push_back(b);
    both_mult.push_back(1);
    single_mult.push_back(1);
  }
  std::vector<int> dims;
  for (const auto& b : both) dims.push_back(b.dim());
  require_dims<T>(dims, "alexandrov_fenchel");
  const T cross = mixed_volume<T>(both, both_mult);
  InequalityReport r;
  r.id = "alexandrov-fenchel";
  r.dim = n;
  r.bodies = encode_all(both);
  r.lhs = to_scalar(T(mixed_volume<T>(first, single_mult) * mixed_volume<T>(second, single_mult)));
  r.rhs = to_scalar(T(cross * cross));
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_brunn_minkowski(const VPolytope<T>& p, const VPolytope<T>& q) {
  require_dims<T>({p.dim(), q.dim()}, "brunn_minkowski");
  const int n = p.dim();
  const Rational vp = to_rat(p.volume());
  const Rational vq = to_rat(q.volume());
  const Rational vs = to_rat(minkowski_sum(p, q).volume());
  InequalityReport r;
  r.id = "brunn-minkowski";
  r.dim = n;
  r.bodies = Json::array({encode(p), encode(q)});
  r.rhs = Scalar(vs);
  if (n == 1 || vp.sign() == 0 || vq.sign() == 0) {
    r.lhs = Scalar(n == 1 ? Rational(vp + vq) : std::max(vp, vq));
  } else if (auto rho = exact_root(vp / vq, n)) {
    r.lhs = Scalar(vq * pow(*rho + 1, n));
  } else {
    // (x+y)^n = s with x/y irrational cannot happen, so refinement terminates.
    r.exact = false;
    for (int bits = 64;; bits *= 2) {
      if (bits > 8192) throw std::runtime_error("brunn_minkowski: bracket refinement did not separate");
      const Rational width = (vs + 1) / pow(Rational(2), bits);
      const RootBracket x = root_bracket(vp, n, width);
      const RootBracket y = root_bracket(vq, n, width);
      const Rational hi = pow(x.hi + y.hi, n);
      if (hi <= vs) {
        r.lhs = Scalar(hi);
        break;
      }
      const Rational lo = pow(x.lo + y.lo, n);
      if (vs < lo) {
        r.lhs = Scalar(lo);
        break;
      }
    }
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_ruzsa_triangle(const CompactSet<T>& a, const CompactSet<T>& b, const CompactSet<T>& c) {
  require_dims<T>({dim(a), dim(b), dim(c)}, "ruzsa_triangle");
  InequalityReport r;
  r.id = "ruzsa-triangle";
  r.dim = dim(a);
  r.bodies = Json::array({body_to_json(a), body_to_json(b), body_to_json(c)});
  const T bc = measure(sum(b, negate(c)));
  const T ac = measure(sum(a, negate(c)));
  const T ab = measure(sum(a, negate(b)));
  r.lhs = to_scalar(T(measure(a) * bc));
  r.rhs = to_scalar(T(ac * ab));
  if (sign(r.rhs) == 0) {
    r.degenerate = true;
  } else {
    r.ratio = r.lhs / r.rhs;
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_litvak(const VPolytope<T>& a, const VPolytope<T>& b) {
  require_dims<T>({a.dim(), b.dim()}, "litvak");
  const int n = a.dim();
  const T diff = minkowski_sum(a, reflect(b)).volume();
  InequalityReport r;
  r.id = "litvak";
  r.dim = n;
  r.bodies = Json::array({encode(a), encode(b)});
  r.constant = Scalar(litvak_constant(n));
  r.lhs = to_scalar(minkowski_sum(a, b).volume());
  r.rhs = r.constant * to_scalar(diff);
  if (sign(diff) == 0) {
    r.degenerate = true;
  } else {
    r.ratio = r.lhs / to_scalar(diff);
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_triangle_variant(const VPolytope<T>& a, const VPolytope<T>& b, const VPolytope<T>& c) {
  require_dims<T>({a.dim(), b.dim(), c.dim()}, "triangle_variant");
  const int n = a.dim();
  const T amb = minkowski_sum(a, reflect(b)).volume();
  const T apc = minkowski_sum(a, c).volume();
  const T amc = minkowski_sum(a, reflect(c)).volume();
  const T best = std::min(T(amb * apc), T(amb * amc));
  InequalityReport r;
  r.id = "triangle-variant";
  r.dim = n;
  r.bodies = Json::array({encode(a), encode(b), encode(c)});
  r.constant = Scalar(litvak_constant(n) * plunnecke_constant(n));
  r.lhs = to_scalar(T(a.volume() * minkowski_sum(minkowski_sum(a, b), c).volume()));
  r.rhs = r.constant * to_scalar(best);
  if (sign(best) == 0) {
    r.degenerate = true;
  } else {
    r.ratio = r.lhs / to_scalar(best);
  }
  settle(r);
  return r;
}

template <ExactField T>
InequalityReport check_planar_difference(const VPolytope<T>& a, const VPolytope<T>& c) {
  require_dims<T>({a.dim(), c.dim()}, "planar_difference");
  if (a.dim() != 2) throw std::invalid_argument("planar_difference: bodies must be planar");
  const T minus = minkowski_sum(a, reflect(c)).volume();
  const T plus = minkowski_sum(a, c).volume();
  const T d = minus - plus;
  InequalityReport r;
  r.id = "planar-difference";
  r.dim = 2;
  r.bodies = Json::array({encode(a), encode(c)});
  r.params = Json{{"form", "D|D| <= 4|A||C|, D = |A-C| - |A+C|"},
                  {"difference_volume", to_string(to_scalar(minus))},
                  {"sum_volume", to_string(to_scalar(plus))}};
  r.lhs = to_scalar(T(d * abs(d)));
  r.rhs = to_scalar(T(4 * a.volume() * c.volume()));
  settle(r);
  return r;
}

template <ExactField T>
Asymmetry<T> asymmetry(const VPolytope<T>& a, const VPolytope<T>& c) {
  require_dims<T>({a.dim(), c.dim()}, "asymmetry");
  const T minus = minkowski_sum(a, reflect(c)).volume();
  const T plus = minkowski_sum(a, c).volume();
  const T product = T(4) * a.volume() * c.volume();
  Asymmetry<T> out;
  InequalityReport& r = out.report;
  r.id = "asymmetry";
  r.dim = a.dim();
  r.bodies = Json::array({encode(a), encode(c)});
  r.lhs = to_scalar(T((plus - minus) * (plus - minus)));
  r.rhs = to_scalar(product);
  if (sign(minus) == 0) {
    r.degenerate = true;
    out.asym = T(0);
    out.bound_squared = T(0);
  } else {
    out.asym = abs(T(plus / minus - 1));
    out.bound_squared = product / (minus * minus);
    r.params = Json{{"asym", to_string(to_scalar(out.asym))}, {"bound_squared", to_string(to_scalar(out.bound_squared))}};
  }
  settle(r);
  return out;
}

template <ExactField T>
InequalityReport check_delta_increment(const BoxUnion<T>& a, const BoxUnion<T>& b, const BoxUnion<T>& c) {
  require_dims<T>({a.dim, b.dim, c.dim}, "delta_increment");
  const Point<T> zero = Point<T>::Zero(a.dim);
  if (!contains(b, zero) || !contains(c, zero)) throw std::invalid_argument("delta_increment: 0 must lie in B and C");
  const BoxUnion<T> ab = boxunion_sum(a, b);
  const BoxUnion<T> ac = boxunion_sum(a, c);
  const BoxUnion<T> abc = boxunion_sum(ab, c);
  const BoxUnion<T> delta_b = difference(ab, a);
  const BoxUnion<T> delta_cb = difference(boxunion_sum(delta_b, c), delta_b);
  InequalityReport r;
  r.id = "delta-increment";
  r.dim = a.dim;
  r.bodies = Json::array({body_to_json<T>(CompactSet<T>(a)), body_to_json<T>(CompactSet<T>(b)),
                          body_to_json<T>(CompactSet<T>(c))});
  r.lhs = to_scalar(T(volume(abc) - volume(ac) - volume(ab) + volume(a)));
  r.rhs = to_scalar(volume(delta_cb));
  settle(r);
  return r;
}

namespace {

/// Rational point of the unit circle with parameter t = p/q near tan(angle/2).
Point<Rational> circle_point(double angle, long q) {
  const long p = std::lround(std::tan(angle / 2) * static_cast<double>(q));
  const Rational qq(q * q);
  const Rational pp(p * p);
  Point<Rational> v(2);
  v << (qq - pp) / (qq + pp), Rational(2 * p * q) / (qq + pp);
  return v;
}

/// 4k points of the circle, invariant under quarter turns, near the angles
/// (k + 1/2) 2 pi / count.
std::vector<Point<Rational>> circle_points(int count) {
  constexpr long kDenominator = 1L << 12;
  std::vector<Point<Rational>> quarter;
  for (int k = 0; k < count / 4; ++k) {
    quarter.push_back(circle_point((k + 0.5) * 2 * std::numbers::pi / count, kDenominator));
  }
  std::vector<Point<Rational>> out;
  for (int turn = 0; turn < 4; ++turn) {
    for (auto& v : quarter) {
      out.push_back(v);
      Point<Rational> w(2);
      w << -v[1], v[0];
      v = w;
    }
  }
  return out;
}

Rational inradius_squared(const VPolytope<Rational>& p) {
  HullResult<Rational> h = convex_hull(p.vertices(), true);
  std::optional<Rational> best;
  for (const auto& f : h.facets) {
    Point<Rational> normal(p.dim());
    const Point<Rational> v0 = p.vertex(f[0]);
    if (p.dim() == 2) {
      const Point<Rational> e = p.vertex(f[1]) - v0;
      normal << -e[1], e[0];
    } else {
      const Point<Rational> e1 = p.vertex(f[1]) - v0;
      const Point<Rational> e2 = p.vertex(f[2]) - v0;
      normal << e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2], e1[0] * e2[1] - e1[1] * e2[0];
    }
    const Rational off = dot<Rational>(normal, v0);
    const Rational d2 = off * off / dot<Rational>(normal, normal);
    if (!best || d2 < *best) best = d2;
  }
  return *best;
}

Rational root_lower(const Rational& x) { return root_bracket(x, 2, Rational(1) / pow(Rational(2), 96)).lo; }

}  // namespace

BallPolytope ball_polytope(int dim, int level) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("ball_polytope: unsupported dimension");
  if (level < 2 || level > 8) throw std::invalid_argument("ball_polytope: level must lie in [2, 8]");
  const std::vector<Point<Rational>> ring = circle_points(1 << level);
  std::vector<Point<Rational>> pts;
  if (dim == 2) {
    pts = ring;
  } else {
    const int rings = 1 << (level - 1);
    for (int j = 0; j < rings; ++j) {
      const double lat = -std::numbers::pi / 2 + (j + 0.5) * std::numbers::pi / rings;
      const Point<Rational> cs = circle_point(lat, 1L << 12);
      for (const auto& v : ring) {
        Point<Rational> w(3);
        w << cs[0] * v[0], cs[0] * v[1], cs[1];
        pts.push_back(w);
      }
    }
    Point<Rational> pole(3);
    pole << 0, 0, 1;
    pts.push_back(pole);
    pts.push_back(-pole);
  }
  PointMatrix<Rational> m(dim, static_cast<Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) m.col(static_cast<Index>(i)) = pts[i];
  BallPolytope out;
  out.body = VPolytope<Rational>(m);
  out.inradius_squared = inradius_squared(out.body);
  out.level = level;
  return out;
}

InequalityReport check_projection_ball(const VPolytope<Rational>& k, int axis, int level) {
  const int n = k.dim();
  if (n != 2 && n != 3) throw std::invalid_argument("projection_ball: unsupported dimension");
  if (axis < 0 || axis >= n) throw std::out_of_range("projection_ball: axis out of range");
  const BallPolytope ball = ball_polytope(n, level);
  std::vector<Point<Rational>> basis;
  for (int i = 0; i < n; ++i) {
    if (i == axis) continue;
    basis.push_back(Point<Rational>::Unit(n, i));
  }
  const VPolytope<Rational> kp = minkowski_sum(k, ball.body);
  const Rational shadow_kp = projected_volume(kp, basis);
  const Rational shadow_p = projected_volume(ball.body, basis);
  const Rational kappa = pow(root_lower(ball.inradius_squared), 2 * n - 1);
  InequalityReport r;
  r.id = "projection-ball";
  r.dim = n;
  r.bodies = Json::array({encode(k)});
  r.params = Json{{"axis", axis}, {"level", level}, {"inradius_squared", to_string(ball.inradius_squared)}};
  r.constant = Scalar(kappa);
  r.lhs = Scalar(kappa * ball.body.volume() * shadow_kp);
  r.rhs = Scalar(kp.volume() * shadow_p);
  r.ratio = Scalar((kp.volume() * shadow_p) / (ball.body.volume() * shadow_kp));
  r.tolerance = 1 - kappa;
  settle(r);
  return r;
}

InequalityReport check_zonoid_ellipsoid(const VPolytope<Rational>& k, const Zonotope<Rational>& z, int level) {
  const int n = k.dim();
  if (n != 2 && n != 3) throw std::invalid_argument("zonoid_ellipsoid: unsupported dimension");
  if (z.dim() != n) throw DimensionMismatch("zonoid_ellipsoid: dimension mismatch");
  const BallPolytope ball = ball_polytope(n, level);
  const VPolytope<Rational> zp = to_vpolytope(z);
  const VPolytope<Rational> pk = minkowski_sum(ball.body, k);
  const VPolytope<Rational> pz = minkowski_sum(ball.body, zp);
  const Rational factor = pow(1 / ball.inradius_squared, n);
  InequalityReport r;
  r.id = "zonoid-ellipsoid";
  r.dim = n;
  r.bodies = Json::array({encode(k), body_to_json<Rational>(CompactSet<Rational>(z))});
  r.params = Json{{"level", level}, {"inradius_squared", to_string(ball.inradius_squared)}};
  r.constant = Scalar(factor);
  const Rational lhs = ball.body.volume() * minkowski_sum(pk, zp).volume();
  const Rational den = pk.volume() * pz.volume();
  r.lhs = Scalar(lhs);
  r.rhs = Scalar(factor * den);
  r.ratio = Scalar(lhs / den);
  r.tolerance = factor - 1;
  settle(r);
  return r;
}

#define CONVEXSUM_INSTANTIATE(T)                                                                                   \
  template InequalityReport check_supermodular3<T>(const CompactSet<T>&, const CompactSet<T>&,                     \
                                                   const CompactSet<T>&);                                          \
  template InequalityReport check_m_supermodular<T>(const std::vector<VPolytope<T>>&, Subset,                      \
                                                    const std::vector<Subset>&);                                   \
  template InequalityReport check_compression<T>(const std::vector<VPolytope<T>>&, const Multiset&,                \
                                                 const Multiset&);                                                 \
  template InequalityReport check_fractional_superadditivity<T>(const std::vector<VPolytope<T>>&,                  \
                                                                const FractionalPartition&);                       \
  template InequalityReport plunnecke_ratio3<T>(const VPolytope<T>&, const VPolytope<T>&, const VPolytope<T>&);    \
  template InequalityReport check_plunnecke_m<T>(const VPolytope<T>&, const std::vector<VPolytope<T>>&);           \
  template InequalityReport check_ruzsa_m<T>(const VPolytope<T>&, const std::vector<VPolytope<T>>&);               \
  template InequalityReport check_fractional_plunnecke<T>(const VPolytope<T>&, const std::vector<VPolytope<T>>&,   \
                                                          int, const std::optional<std::vector<Rational>>&);       \
  template InequalityReport check_xiao<T>(const VPolytope<T>&, const VPolytope<T>&, const VPolytope<T>&, int, int); \
  template InequalityReport check_fenchel_local<T>(const VPolytope<T>&, const VPolytope<T>&, const VPolytope<T>&); \
  template InequalityReport check_alexandrov_fenchel<T>(const VPolytope<T>&, const VPolytope<T>&,                  \
                                                        const std::vector<VPolytope<T>>&);                         \
  template InequalityReport check_brunn_minkowski<T>(const VPolytope<T>&, const VPolytope<T>&);                    \
  template InequalityReport check_ruzsa_triangle<T>(const CompactSet<T>&, const CompactSet<T>&,                    \
                                                    const CompactSet<T>&);                                         \
  template InequalityReport check_litvak<T>(const VPolytope<T>&, const VPolytope<T>&);                             \
  template InequalityReport check_triangle_variant<T>(const VPolytope<T>&, const VPolytope<T>&,                    \
                                                      const VPolytope<T>&);                                        \
  template InequalityReport check_planar_difference<T>(const VPolytope<T>&, const VPolytope<T>&);                  \
  template Asymmetry<T> asymmetry<T>(const VPolytope<T>&, const VPolytope<T>&);                                    \
  template InequalityReport check_delta_increment<T>(const BoxUnion<T>&, const BoxUnion<T>&, const BoxUnion<T>&);

CONVEXSUM_INSTANTIATE(Rational)
CONVEXSUM_INSTANTIATE(Scalar)

}  // namespace convexsum
