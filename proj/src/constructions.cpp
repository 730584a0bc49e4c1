#include "convexsum/constructions.hpp"

#include "convexsum/boxunion.hpp"
#include "convexsum/convex_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace convexsum {

void LatticeRows::add_run(long y, long z, long x0, long x1) { rows[{y, z}].emplace_back(x0, x1); }

void LatticeRows::normalize() {
  for (auto& [key, runs] : rows) {
    std::sort(runs.begin(), runs.end());
    std::vector<std::pair<long, long>> merged;
    for (const auto& r : runs) {
      if (!merged.empty() && r.first <= merged.back().second + 1) {
        merged.back().second = std::max(merged.back().second, r.second);
      } else {
        merged.push_back(r);
      }
    }
    runs = std::move(merged);
  }
}

long long LatticeRows::count() const {
  long long n = 0;
  for (const auto& [key, runs] : rows) {
    for (const auto& [x0, x1] : runs) n += x1 - x0 + 1;
  }
  return n;
}

bool LatticeRows::contains(long x, long y, long z) const {
  auto it = rows.find({y, z});
  if (it == rows.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [x](const auto& r) { return r.first <= x && x <= r.second; });
}

LatticeRows lattice_sum(const LatticeRows& s, const LatticeRows& t) {
  LatticeRows out;
  for (const auto& [ks, rs] : s.rows) {
    for (const auto& [kt, rt] : t.rows) {
      auto& dst = out.rows[{ks.first + kt.first, ks.second + kt.second}];
      for (const auto& a : rs) {
        for (const auto& b : rt) dst.emplace_back(a.first + b.first, a.second + b.second);
      }
    }
  }
  out.normalize();
  return out;
}

LatticeRows ruzsa_a_prime(long m) {
  LatticeRows a;
  for (long y = 0; y < m; ++y) a.add_run(y, 0, 0, m - 1);
  for (long z = 1; z <= m; ++z) a.add_run(0, z, 0, 0);
  a.normalize();
  return a;
}

LatticeRows ruzsa_b_prime(long l) {
  LatticeRows b;
  b.add_run(0, 0, 0, l);
  for (long y = 1; y <= l; ++y) b.add_run(y, 0, 0, 0);
  b.normalize();
  return b;
}

namespace {

Scalar lattice_value(long a, long b, long c) {
  return Scalar(Rational(a), Rational(b), Rational(c), Rational(0));
}

// Some p in s with p + v in s.
bool realized_difference(const LatticeRows& s, long a, long b, long c) {
  for (const auto& [key, runs] : s.rows) {
    auto it = s.rows.find({key.first + b, key.second + c});
    if (it == s.rows.end()) continue;
    const auto& other = it->second;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < runs.size() && j < other.size()) {
      const long lo = std::max(runs[i].first + a, other[j].first);
      const long hi = std::min(runs[i].second + a, other[j].second);
      if (lo <= hi) return true;
      if (runs[i].second + a < other[j].second) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return false;
}

}  // namespace

GapBound lattice_gap(const LatticeRows& s) {
  if (s.count() < 2) throw std::invalid_argument("lattice_gap: fewer than two points");
  long xmin = std::numeric_limits<long>::max();
  long xmax = std::numeric_limits<long>::min();
  long ymin = xmin;
  long ymax = xmax;
  long zmin = xmin;
  long zmax = xmax;
  for (const auto& [key, runs] : s.rows) {
    ymin = std::min(ymin, key.first);
    ymax = std::max(ymax, key.first);
    zmin = std::min(zmin, key.second);
    zmax = std::max(zmax, key.second);
    xmin = std::min(xmin, runs.front().first);
    xmax = std::max(xmax, runs.back().second);
  }
  const long dx = xmax - xmin;
  const long dy = ymax - ymin;
  const long dz = zmax - zmin;
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);

  // Up to sign, each difference class has c > 0, or c = 0 and b > 0, or b = c = 0.
  auto best_a = [&](long b, long c, double& val) {
    const double t = b * r2 + c * r3;
    const long a = std::clamp(-std::lround(t), -dx, dx);
    val = std::abs(a + t);
    return a;
  };
  auto for_each_class = [&](auto&& f) {
    for (long c = 0; c <= dz; ++c) {
      for (long b = (c == 0 ? 1 : -dy); b <= dy; ++b) f(b, c);
    }
  };

  double best = dx >= 1 ? 1.0 : std::numeric_limits<double>::infinity();
  for_each_class([&](long b, long c) {
    double v;
    best_a(b, c, v);
    best = std::min(best, v);
  });

  std::vector<std::array<long, 3>> candidates;
  if (dx >= 1 && 1.0 <= best + 1e-9) candidates.push_back({1, 0, 0});
  for_each_class([&](long b, long c) {
    double v;
    const long a = best_a(b, c, v);
    if (v <= best + 1e-9) candidates.push_back({a, b, c});
  });

  GapBound g;
  bool first = true;
  for (const auto& v : candidates) {
    const Scalar val = abs(lattice_value(v[0], v[1], v[2]));
    if (val.is_zero()) continue;
    if (first || val < g.gap) {
      g.gap = val;
      g.witness = v;
      first = false;
    }
  }
  g.realized = realized_difference(s, g.witness[0], g.witness[1], g.witness[2]);
  return g;
}

std::optional<long> ruzsa_min_l(long m, const Rational& beta_prime) {
  if (m < 1 || Rational(m + 1) <= 16 * beta_prime) return std::nullopt;
  const Rational mp1(m + 1);
  auto ok = [&](long l) {
    const Rational rhs_base(m + 4 * l + 1);
    return mp1 * Rational(l) * Rational(l) >= beta_prime * rhs_base * rhs_base;
  };
  long hi = 1;
  while (!ok(hi)) hi *= 2;
  long lo = hi / 2 + 1;
  if (hi == 1) return 1;
  // The condition is a quadratic in l with positive leading coefficient and
  // fails at l = 0, so it holds exactly from its positive root on.
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

std::pair<long, long> ruzsa_parameters(const Rational& beta) {
  if (sign(beta) <= 0) throw std::invalid_argument("ruzsa_counterexample: beta must be positive");
  const Rational bp = Rational(4, 3) * beta;
  const Rational threshold = 16 * bp;
  long m = static_cast<long>(boost::multiprecision::numerator(threshold) /
                             boost::multiprecision::denominator(threshold));
  while (Rational(m + 1) <= threshold) ++m;
  long best_m = 0;
  long best_l = 0;
  for (; best_m == 0 || m < best_m + best_l; ++m) {
    const long l = *ruzsa_min_l(m, bp);
    if (best_m == 0 || m + l < best_m + best_l) {
      best_m = m;
      best_l = l;
    }
  }
  return {best_m, best_l};
}

RuzsaCounterexample build_ruzsa_counterexample(const Rational& beta, std::optional<long> m,
                                               std::optional<long> l) {
  if (sign(beta) <= 0) throw std::invalid_argument("ruzsa_counterexample: beta must be positive");
  RuzsaCounterexample ex;
  ex.beta = beta;
  ex.beta_prime = Rational(4, 3) * beta;
  if (m.has_value() != l.has_value()) {
    throw std::invalid_argument("ruzsa_counterexample: give both m and l or neither");
  }
  if (m) {
    const auto lmin = ruzsa_min_l(*m, ex.beta_prime);
    if (!lmin) throw std::invalid_argument("ruzsa_counterexample: need m+1 > 16 beta'");
    if (*l < *lmin) throw std::invalid_argument("ruzsa_counterexample: l too small for m");
    ex.m = *m;
    ex.l = *l;
  } else {
    std::tie(ex.m, ex.l) = ruzsa_parameters(beta);
  }

  const LatticeRows a = ruzsa_a_prime(ex.m);
  const LatticeRows b = ruzsa_b_prime(ex.l);
  const LatticeRows ab = lattice_sum(a, b);
  const LatticeRows bb = lattice_sum(b, b);
  const LatticeRows abb = lattice_sum(a, bb);
  ex.card_a = a.count();
  ex.card_ab = ab.count();
  ex.card_bb = bb.count();
  ex.card_abb = abb.count();

  // 0 is in B', so A' and A'+B' sit inside A'+B'+B' and share its gap bound.
  // Components of A+B+B have length 6 eps and stay disjoint iff 6 eps < gap.
  ex.gap = lattice_gap(abb);
  ex.epsilon = Rational(1, 100 * (ex.m + ex.l));
  while (!(Scalar(6 * ex.epsilon) < ex.gap.gap)) ex.epsilon /= 2;

  ex.vol_a = 2 * ex.epsilon * Rational(ex.card_a);
  ex.vol_ab = 4 * ex.epsilon * Rational(ex.card_ab);
  ex.vol_abb = 6 * ex.epsilon * Rational(ex.card_abb);

  InequalityReport& r = ex.report;
  r.id = "ruzsa-counterexample";
  r.dim = 1;
  r.constant = Scalar(beta);
  r.lhs = Scalar(ex.vol_a * ex.vol_abb);
  r.rhs = Scalar(beta * ex.vol_ab * ex.vol_ab);
  r.ratio = Scalar(ex.vol_a * ex.vol_abb / (ex.vol_ab * ex.vol_ab));
  settle(r);
  r.params = Json{{"beta", to_string(beta)},
                  {"beta_prime", to_string(ex.beta_prime)},
                  {"m", ex.m},
                  {"l", ex.l},
                  {"epsilon", to_string(ex.epsilon)},
                  {"min_gap", to_string(ex.gap.gap)},
                  {"min_gap_decimal", to_decimal(ex.gap.gap)},
                  {"min_gap_exact", ex.gap.realized},
                  {"card_a", ex.card_a},
                  {"card_ab", ex.card_ab},
                  {"card_bb", ex.card_bb},
                  {"card_abb", ex.card_abb},
                  {"vol_a", to_string(ex.vol_a)},
                  {"vol_ab", to_string(ex.vol_ab)},
                  {"vol_abb", to_string(ex.vol_abb)},
                  {"witness", !r.pass}};
  return ex;
}

RuzsaThickening ruzsa_thickening(long m, long l, const Rational& epsilon) {
  auto to_points = [](const LatticeRows& s) {
    PointMatrix<Scalar> pts(1, static_cast<Index>(s.count()));
    Index k = 0;
    for (const auto& [key, runs] : s.rows) {
      for (const auto& [x0, x1] : runs) {
        for (long x = x0; x <= x1; ++x) pts(0, k++) = lattice_value(x, key.first, key.second);
      }
    }
    return PointSet<Scalar>(pts);
  };
  auto thicken = [&](const PointSet<Scalar>& s) {
    BoxUnion<Scalar> u;
    u.dim = 1;
    for (Index i = 0; i < s.size(); ++i) {
      Point<Scalar> lo(1);
      Point<Scalar> hi(1);
      lo[0] = s.points()(0, i) - Scalar(epsilon);
      hi[0] = s.points()(0, i) + Scalar(epsilon);
      u.boxes.push_back({lo, hi});
    }
    return u;
  };
  RuzsaThickening t;
  t.a_prime = to_points(ruzsa_a_prime(m));
  t.b_prime = to_points(ruzsa_b_prime(l));
  t.a = thicken(t.a_prime);
  t.b = thicken(t.b_prime);
  return t;
}

StarExample build_star_example(long m, std::optional<Rational> w) {
  if (m < 1) throw std::invalid_argument("star: m must be >= 1");
  StarExample ex;
  ex.m = m;
  ex.w = w ? *w : Rational(1, m * m);
  if (sign(ex.w) <= 0) throw std::invalid_argument("star: w must be positive");
  BoxUnion<Rational>& a = ex.body;
  a.dim = 3;
  a.boxes.push_back({Point<Rational>::Constant(3, Rational(-1)), Point<Rational>::Constant(3, Rational(1))});
  for (int i = 0; i < 3; ++i) {
    Point<Rational> lo = Point<Rational>::Constant(3, -ex.w);
    Point<Rational> hi = Point<Rational>::Constant(3, ex.w);
    lo[i] = Rational(-m);
    hi[i] = Rational(m);
    a.boxes.push_back({lo, hi});
  }
  const BoxUnion<Rational> a2 = boxunion_sum(a, a);
  const BoxUnion<Rational> a3 = boxunion_sum(a2, a);
  ex.vol_a = volume(a);
  ex.vol_2a = volume(a2);
  ex.vol_3a = volume(a3);

  InequalityReport& r = ex.report;
  r.id = "star";
  r.dim = 3;
  r.bodies = Json::array({body_to_json<Rational>(CompactSet<Rational>(a))});
  r.lhs = Scalar(ex.vol_a * ex.vol_3a);
  r.rhs = Scalar(ex.vol_2a * ex.vol_2a);
  r.ratio = Scalar(ex.vol_a * ex.vol_3a / (ex.vol_2a * ex.vol_2a));
  settle(r);
  r.params = Json{{"m", m},
                  {"w", to_string(ex.w)},
                  {"vol_a", to_string(ex.vol_a)},
                  {"vol_2a", to_string(ex.vol_2a)},
                  {"vol_3a", to_string(ex.vol_3a)},
                  {"ratio_decimal", to_decimal(*r.ratio)}};
  return ex;
}

Rational eval_lower_bound(int n, int i, int j, int k) {
  if (n < 1 || i < 1 || j < 1 || i > n || j > n || i + j < n + 1 || k != i + j - n) {
    throw std::invalid_argument("eval_lower_bound: infeasible (i, j, k)");
  }
  return binomial(i, k) * binomial(j, k) / binomial(n, k);
}

std::vector<LowerBoundRow> lower_bound_table(int n) {
  std::vector<LowerBoundRow> rows;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i + j < n + 1) continue;
      const int k = i + j - n;
      rows.push_back({i, j, k, eval_lower_bound(n, i, j, k)});
    }
  }
  return rows;
}

LowerBoundRow max_lower_bound(int n) {
  const auto rows = lower_bound_table(n);
  if (rows.empty()) throw std::invalid_argument("max_lower_bound: n must be >= 1");
  LowerBoundRow best = rows.front();
  for (const auto& r : rows) {
    if (r.value > best.value) best = r;
  }
  return best;
}

InequalityReport check_lower_bound_growth(int n) {
  if (n < 3 || n % 3 != 0) throw std::invalid_argument("lower bound growth: n must be a positive multiple of 3");
  // pi > 3.141592653589793, so 1/sqrt(pi n) < sqrt(1/(pi_lo n)) <= bracket.hi.
  const Rational pi_lo(BigInt("3141592653589793"), BigInt("1000000000000000"));
  const Rational inv_sqrt_hi = root_bracket(1 / (pi_lo * n), 2, Rational(1, BigInt(1) << 96)).hi;
  const Rational bound = 2 * inv_sqrt_hi * pow(Rational(4, 3), n);
  const Rational value = eval_lower_bound(n, 2 * n / 3, 2 * n / 3, n / 3);
  InequalityReport r;
  r.id = "lower-bound-growth";
  r.dim = n;
  r.lhs = Scalar(bound);
  r.rhs = Scalar(value);
  r.ratio = Scalar(value / bound);
  r.exact = false;
  settle(r);
  r.params = Json{{"i", 2 * n / 3},
                  {"j", 2 * n / 3},
                  {"k", n / 3},
                  {"value_decimal", to_decimal(value)},
                  {"bound_decimal", to_decimal(bound)}};
  return r;
}

InequalityReport interval_case_check(const Rational& a, const Rational& b, const BoxUnion<Rational>& c) {
  if (sign(a) < 0 || sign(b) < 0) throw std::invalid_argument("interval_case: a, b must be >= 0");
  if (c.dim != 1 || c.boxes.empty()) throw std::invalid_argument("interval_case: C must be a nonempty 1-D union");
  auto interval = [](const Rational& len) {
    BoxUnion<Rational> u;
    u.dim = 1;
    u.boxes.push_back({Point<Rational>::Constant(1, Rational(0)), Point<Rational>::Constant(1, len)});
    return u;
  };
  const BoxUnion<Rational> ua = interval(a);
  const BoxUnion<Rational> ub = interval(b);
  const BoxUnion<Rational> uac = boxunion_sum(ua, c);
  const BoxUnion<Rational> uabc = boxunion_sum(uac, ub);
  InequalityReport r;
  r.id = "interval-case";
  r.dim = 1;
  r.bodies = Json::array({body_to_json<Rational>(CompactSet<Rational>(ua)),
                          body_to_json<Rational>(CompactSet<Rational>(ub)),
                          body_to_json<Rational>(CompactSet<Rational>(c))});
  r.lhs = Scalar(a * volume(uabc));
  r.rhs = Scalar((a + b) * volume(uac));
  settle(r);
  return r;
}

template <ExactField T>
Triple<T> tensor_triples(const Triple<T>& x, const Triple<T>& y) {
  return {direct_product(x.a, y.a), direct_product(x.b, y.b), direct_product(x.c, y.c)};
}

template Triple<Rational> tensor_triples<Rational>(const Triple<Rational>&, const Triple<Rational>&);
template Triple<Scalar> tensor_triples<Scalar>(const Triple<Scalar>&, const Triple<Scalar>&);

}  // namespace convexsum
