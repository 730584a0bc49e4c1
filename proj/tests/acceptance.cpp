// Acceptance run: one PASS/FAIL line per criterion with its pinned tolerance
// and wall time.  Exit status is 0 iff the failing criteria are exactly the
// ones listed with --expect-fail.

#include "convexsum/boxunion.hpp"
#include "convexsum/constructions.hpp"
#include "convexsum/convex_ops.hpp"
#include "convexsum/mixed.hpp"
#include "convexsum/random.hpp"
#include "convexsum/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace convexsum;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string str(const Scalar& x) { return to_string(x); }

AggregateReport sweep(const std::string& id, int dim, long long samples, const std::string& generator,
                      std::uint64_t seed, Json params = Json::object()) {
  SweepConfig c;
  c.inequality = id;
  c.dim = dim;
  c.samples = samples;
  c.generator = generator;
  c.seed = seed;
  c.params = std::move(params);
  return run_sweep(c);
}

std::vector<int> random_composition(std::mt19937_64& rng, int n, int k) {
  // n balls into k nonempty boxes: choose k-1 distinct cut points in 1..n-1.
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < k - 1) {
    const int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> parts;
  int prev = 0;
  for (int c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(n - prev);
  return parts;
}

VPolytope<Rational> small_body(std::mt19937_64& rng, int n) {
  switch (rng() % 3) {
    case 0:
      return random_simplex(rng, n);
    case 1:
      return random_polytope(rng, n, n + 2);
    default:
      return to_vpolytope(random_zonotope(rng, n, 2));
  }
}

Outcome mixed_volume_crosscheck() {
  long long mismatches = 0;
  long long queries = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int q = 0; q < 500; ++q) {
      std::mt19937_64 rng = substream(1000 + n, q);
      const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      std::vector<VPolytope<Rational>> bodies;
      for (int i = 0; i < k; ++i) bodies.push_back(small_body(rng, n));
      const auto mult = random_composition(rng, n, k);
      ++queries;
      if (mixed_volume(bodies, mult) != mixed_volume_interpolated(bodies, mult)) ++mismatches;
      if (mixed_volume<Rational>({bodies[0]}, {n}) != bodies[0].volume()) ++mismatches;
    }
  }
  std::ostringstream os;
  os << queries << " queries over n = 2,3,4, " << mismatches << " mismatches (tolerance 0)";
  return {mismatches == 0, os.str()};
}

Outcome c2_planar() {
  const AggregateReport a = sweep("plunnecke3", 2, 10000, "mixed", 2);
  std::mt19937_64 rng = substream(2, 1u << 20);
  const VPolytope<Rational> t = random_polytope(rng, 2, 6);
  const VPolytope<Rational> o = VPolytope<Rational>::origin(2);
  const InequalityReport probe = plunnecke_ratio3(t, o, o);
  const bool ok = a.failures.empty() && a.max_ratio && *a.max_ratio <= Scalar(1) && probe.ratio &&
                  *probe.ratio == Scalar(1);
  std::ostringstream os;
  os << a.instances << " planar triples, max ratio " << (a.max_ratio ? to_decimal(*a.max_ratio) : "-")
     << " <= 1 exactly, probe B=C={0} ratio " << (probe.ratio ? str(*probe.ratio) : "-");
  return {ok, os.str()};
}

Outcome c3_three_dim() {
  const AggregateReport a = sweep("plunnecke3", 3, 1000, "mixed", 3);
  const LowerBoundRow r3 = max_lower_bound(3);
  const LowerBoundRow r4 = max_lower_bound(4);
  const bool ok = a.failures.empty() && a.max_ratio && *a.max_ratio <= Scalar(Rational(4, 3)) && r3.i == 2 &&
                  r3.j == 2 && r3.k == 1 && r3.value == Rational(4, 3) && r4.value >= Rational(3, 2);
  std::ostringstream os;
  os << a.instances << " triples, max ratio " << (a.max_ratio ? to_decimal(*a.max_ratio) : "-")
     << " <= 4/3; max_lower_bound(3) = " << to_string(r3.value) << " at (" << r3.i << "," << r3.j << "," << r3.k
     << "), max_lower_bound(4) = " << to_string(r4.value);
  return {ok, os.str()};
}

Outcome c4_alternating() {
  long long negative = 0;
  long long nonzero = 0;
  for (int q = 0; q < 1000; ++q) {
    std::mt19937_64 rng = substream(4, q);
    const int n = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const VPolytope<Rational> b0 = small_body(rng, n);
    std::vector<VPolytope<Rational>> bs;
    for (int i = 0; i < m; ++i) bs.push_back(small_body(rng, n));
    if (sign(alternating_sum(b0, bs)) < 0) ++negative;
  }
  for (int q = 0; q < 100; ++q) {
    std::mt19937_64 rng = substream(40, q);
    const int n = 2 + static_cast<int>(rng() % 2);
    const VPolytope<Rational> b0 = small_body(rng, n);
    std::vector<VPolytope<Rational>> bs;
    for (int i = 0; i < n + 1; ++i) bs.push_back(small_body(rng, n));
    if (sign(alternating_sum(b0, bs)) != 0) ++nonzero;
  }
  std::ostringstream os;
  os << "1000 instances m <= n: " << negative << " negative; 100 instances m = n+1: " << nonzero << " nonzero";
  return {negative == 0 && nonzero == 0, os.str()};
}

Outcome c5_supermodular() {
  long long failures = 0;
  std::ostringstream os;
  for (int n = 2; n <= 4; ++n) {
    const AggregateReport a = sweep("supermodular3", n, 1000, "mixed", 50 + n);
    failures += static_cast<long long>(a.failures.size());
  }
  for (int m = 3; m <= 4; ++m) {
    const AggregateReport a = sweep("m-supermodular", 3, 200, "mixed", 60 + m, Json{{"m", m}});
    failures += static_cast<long long>(a.failures.size());
  }
  PointMatrix<Rational> two(1, 2);
  two << Rational(0), Rational(1);
  const CompactSet<Rational> a = PointSet<Rational>(two);
  const CompactSet<Rational> unit = VPolytope<Rational>(two);
  const InequalityReport cx = check_supermodular3(a, unit, unit);
  os << "3000 triples + 400 m-body instances, " << failures << " failures; A={0,1}, B=C=[0,1] slack "
     << str(cx.slack);
  return {failures == 0 && cx.slack == Scalar(-1), os.str()};
}

Outcome c6_ruzsa() {
  const RuzsaCounterexample ex = build_ruzsa_counterexample(Rational(10));
  const bool cards = ex.card_a == ex.m * (ex.m + 1) && ex.card_ab == ex.m * (ex.m + 4 * ex.l + 1) &&
                     ex.card_bb == ex.l * ex.l + 4 * ex.l + 1 && ex.card_abb >= ex.l * ex.l * ex.m;
  const bool strict = ex.report.lhs > ex.report.rhs;
  const bool disjoint = Scalar(6 * ex.epsilon) < ex.gap.gap;
  std::ostringstream os;
  os << "(m,l) = (" << ex.m << "," << ex.l << "), #A'=" << ex.card_a << " #(A'+B')=" << ex.card_ab
     << " #(B'+B')=" << ex.card_bb << " #(A'+B'+B')=" << ex.card_abb << ", eps " << to_string(ex.epsilon)
     << ", |A||A+B+B| / |A+B|^2 = " << to_decimal(*ex.report.ratio) << " > 10";
  return {cards && strict && disjoint && ex.m <= 500 && ex.l <= 500, os.str()};
}

Outcome c7_star() {
  std::vector<Scalar> ratios;
  bool above = true;
  std::ostringstream os;
  os << "w = 1/m^2, threshold m/15:";
  for (long m : {10L, 100L, 1000L}) {
    const StarExample s = build_star_example(m);
    ratios.push_back(*s.report.ratio);
    above = above && *s.report.ratio > Scalar(Rational(m, 15));
    os << " m=" << m << " ratio " << to_decimal(*s.report.ratio, 8);
  }
  const bool increasing = ratios[0] < ratios[1] && ratios[1] < ratios[2];
  return {above && increasing, os.str()};
}

Outcome c8_section5() {
  const AggregateReport convex = sweep("ruzsa-triangle", 2, 1000, "mixed", 81);
  const AggregateReport boxes = sweep("ruzsa-triangle", 2, 1000, "random-boxunion", 82);
  const AggregateReport litvak = sweep("litvak", 2, 20, "named-construction", 83);
  const AggregateReport planar = sweep("planar-difference", 2, 1000, "mixed", 84);
  const AggregateReport homothetic = sweep("planar-difference", 2, 50, "named-construction", 85);
  bool litvak_equal = litvak.failures.empty();
  for (const auto& r : litvak.reports) litvak_equal = litvak_equal && r.slack.is_zero() && r.constant == Scalar(Rational(3, 2));
  bool homothetic_equal = homothetic.failures.empty();
  for (const auto& r : homothetic.reports) homothetic_equal = homothetic_equal && r.slack.is_zero();
  bool segment_equal = true;
  for (int q = 0; q < 50; ++q) {
    std::mt19937_64 rng = substream(86, q);
    const VPolytope<Rational> a = random_polytope(rng, 2, 6);
    PointMatrix<Rational> ends(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) ends(i, j) = random_coordinate(rng);
    }
    if (ends.col(0) == ends.col(1)) ends(0, 1) += 1;
    const InequalityReport r = check_planar_difference(a, VPolytope<Rational>(ends));
    segment_equal = segment_equal && r.slack.is_zero();
  }
  const long long fails = static_cast<long long>(convex.failures.size() + boxes.failures.size() + planar.failures.size());
  std::ostringstream os;
  os << "Ruzsa triangle 1000 convex + 1000 box-union triples, planar difference 1000 pairs: " << fails
     << " failures; Litvak 3/2 equality at B=-A triangles " << (litvak_equal ? "exact" : "NOT exact")
     << "; planar equality at homothetic triangles " << (homothetic_equal ? "exact" : "NOT exact")
     << ", at segments " << (segment_equal ? "exact" : "NOT exact");
  return {fails == 0 && litvak_equal && homothetic_equal && segment_equal, os.str()};
}

Outcome c9_curved() {
  const AggregateReport proj = sweep("projection-ball", 2, 100, "mixed", 91, Json{{"level", 6}});
  const AggregateReport zon = sweep("zonoid-ellipsoid", 2, 100, "mixed", 92, Json{{"level", 6}});
  Rational worst(0);
  for (const auto* a : {&proj, &zon}) {
    for (const auto& r : a->reports) worst = std::max(worst, *r.tolerance);
  }
  const bool ok = proj.failures.empty() && zon.failures.empty() && worst < Rational(1, 100);
  std::ostringstream os;
  os << "level 6, 100 + 100 planar instances, violations beyond delta: "
     << proj.failures.size() + zon.failures.size() << ", largest delta(6) " << to_decimal(worst, 6) << " < 1/100";
  return {ok, os.str()};
}

Outcome c10_growth() {
  bool ok = true;
  std::ostringstream os;
  os << "c_n(2n/3,2n/3,n/3) vs rational upper bound of (2/sqrt(pi n))(4/3)^n:";
  for (int n : {30, 60, 90}) {
    const InequalityReport r = check_lower_bound_growth(n);
    ok = ok && r.pass;
    os << " n=" << n << " ratio " << to_decimal(*r.ratio, 6);
  }
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail");
  app.add_option("--only", only, "Run just these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "mixed-volume cross-check", 120, mixed_volume_crosscheck},
      {2, "planar three-body constant c2 = 1", 300, c2_planar},
      {3, "c3 <= 4/3 and lower-bound formula", 600, c3_three_dim},
      {4, "alternating sum sign and vanishing", 120, c4_alternating},
      {5, "supermodularity suite", 300, c5_supermodular},
      {6, "compact-set counterexample for beta = 10", 60, c6_ruzsa},
      {7, "star-shaped example growth", 60, c7_star},
      {8, "difference-body suite", 300, c8_section5},
      {9, "ball-approximation checks", 180, c9_curved},
      {10, "lower-bound growth at n = 30, 60, 90", 1, c10_growth},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) failed.insert(c.id);
    std::printf("[%s] criterion %d: %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::set<int> expected_run;
  for (int id : expected) {
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) expected_run.insert(id);
  }
  std::printf("%zu criteria failed\n", failed.size());
  return failed == expected_run ? 0 : 1;
}
