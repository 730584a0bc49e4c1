#include "convexsum/sweep.hpp"

#include "convexsum/boxunion.hpp"
#include "convexsum/convex_ops.hpp"
#include "convexsum/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace convexsum {

const std::vector<std::string>& inequality_ids() {
  static const std::vector<std::string> ids{
      "supermodular3",   "m-supermodular",      "compression",       "fractional-superadditivity",
      "plunnecke3",      "plunnecke-m",         "ruzsa-m",           "fractional-plunnecke",
      "xiao",            "fenchel-local",       "alexandrov-fenchel", "brunn-minkowski",
      "ruzsa-triangle",  "litvak",              "triangle-variant",  "planar-difference",
      "asymmetry",       "delta-increment",     "projection-ball",   "zonoid-ellipsoid"};
  return ids;
}

const std::vector<std::string>& generator_ids() {
  static const std::vector<std::string> ids{"random-polytope", "random-zonotope", "random-triangle",
                                            "random-boxunion", "mixed",           "named-construction"};
  return ids;
}

namespace {

[[noreturn]] void fail(const std::string& id, const std::string& what) {
  throw std::invalid_argument(id + ": " + what);
}

template <ExactField T>
VPolytope<T> convex(const std::string& id, const CompactSet<T>& s) {
  if (const auto* p = std::get_if<VPolytope<T>>(&s)) return *p;
  if (const auto* z = std::get_if<Zonotope<T>>(&s)) return to_vpolytope(*z);
  fail(id, "needs convex bodies (vpolytope or zonotope)");
}

template <ExactField T>
std::vector<VPolytope<T>> convex_all(const std::string& id, const std::vector<CompactSet<T>>& bodies,
                                     std::size_t from = 0) {
  std::vector<VPolytope<T>> out;
  for (std::size_t i = from; i < bodies.size(); ++i) out.push_back(convex(id, bodies[i]));
  return out;
}

template <ExactField T>
BoxUnion<T> boxes(const std::string& id, const CompactSet<T>& s) {
  if (const auto* u = std::get_if<BoxUnion<T>>(&s)) return *u;
  fail(id, "needs box unions");
}

void need(const std::string& id, std::size_t have, std::size_t want) {
  if (have != want) fail(id, "expects " + std::to_string(want) + " bodies, got " + std::to_string(have));
}

void need_at_least(const std::string& id, std::size_t have, std::size_t want) {
  if (have < want) fail(id, "expects at least " + std::to_string(want) + " bodies, got " + std::to_string(have));
}

int int_param(const Json& params, const char* key, int fallback) {
  if (!params.contains(key)) return fallback;
  const Json& v = params.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("param ") + key + " must be an integer");
  return v.get<int>();
}

Rational rational_param(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("expected a rational (integer or \"p/q\" string)");
}

Subset subset_param(const Json& v, std::size_t bodies) {
  if (!v.is_array()) throw ParseError("expected a list of body indices");
  Subset s = 0;
  for (const Json& i : v) {
    if (!i.is_number_integer()) throw ParseError("body index must be an integer");
    const long long k = i.get<long long>();
    if (k < 0 || k >= static_cast<long long>(bodies) || k >= 32) throw ParseError("body index out of range");
    s |= Subset{1} << k;
  }
  return s;
}

Multiset multiset_param(const Json& params, const char* key, std::size_t bodies) {
  if (!params.contains(key) || !params.at(key).is_array()) {
    throw ParseError(std::string("param ") + key + " must be a list of index lists");
  }
  Multiset m;
  for (const Json& s : params.at(key)) m.push_back(subset_param(s, bodies));
  return m;
}

}  // namespace

template <ExactField T>
InequalityReport run_check(const std::string& id, const std::vector<CompactSet<T>>& bodies, const Json& params) {
  const std::size_t n = bodies.size();
  if (id == "supermodular3" || id == "ruzsa-triangle") {
    need(id, n, 3);
    return id == "supermodular3" ? check_supermodular3<T>(bodies[0], bodies[1], bodies[2])
                                 : check_ruzsa_triangle<T>(bodies[0], bodies[1], bodies[2]);
  }
  if (id == "plunnecke3" || id == "xiao" || id == "fenchel-local" || id == "triangle-variant") {
    need(id, n, 3);
    const auto v = convex_all(id, bodies);
    if (id == "plunnecke3") return plunnecke_ratio3(v[0], v[1], v[2]);
    if (id == "fenchel-local") return check_fenchel_local(v[0], v[1], v[2]);
    if (id == "triangle-variant") return check_triangle_variant(v[0], v[1], v[2]);
    return check_xiao(v[0], v[1], v[2], int_param(params, "j", 1), int_param(params, "m", 1));
  }
  if (id == "m-supermodular") {
    need_at_least(id, n, 1);
    Subset s0 = params.contains("s0") ? subset_param(params.at("s0"), n) : 0;
    std::vector<Subset> inc;
    if (params.contains("increments")) {
      inc = multiset_param(params, "increments", n);
    } else {
      for (std::size_t i = 0; i < n && i < 32; ++i) inc.push_back(Subset{1} << i);
    }
    return check_m_supermodular(convex_all(id, bodies), s0, inc);
  }
  if (id == "compression") {
    need_at_least(id, n, 1);
    return check_compression(convex_all(id, bodies), multiset_param(params, "from", n),
                             multiset_param(params, "to", n));
  }
  if (id == "fractional-superadditivity") {
    need_at_least(id, n, 1);
    FractionalPartition p;
    p.k = static_cast<int>(n);
    p.sets = multiset_param(params, "sets", n);
    if (!params.contains("weights") || !params.at("weights").is_array()) throw ParseError("param weights missing");
    for (const Json& w : params.at("weights")) p.weights.push_back(rational_param(w));
    return check_fractional_superadditivity(convex_all(id, bodies), p);
  }
  if (id == "plunnecke-m" || id == "ruzsa-m" || id == "fractional-plunnecke") {
    need_at_least(id, n, 2);
    const VPolytope<T> a = convex(id, bodies[0]);
    const auto bs = convex_all(id, bodies, 1);
    if (id == "plunnecke-m") return check_plunnecke_m(a, bs);
    if (id == "ruzsa-m") return check_ruzsa_m(a, bs);
    std::optional<std::vector<Rational>> c;
    if (params.contains("c")) {
      if (!params.at("c").is_array()) throw ParseError("param c must be a list");
      c.emplace();
      for (const Json& x : params.at("c")) c->push_back(rational_param(x));
    }
    return check_fractional_plunnecke(a, bs, int_param(params, "k", 1), c);
  }
  if (id == "alexandrov-fenchel") {
    need_at_least(id, n, 2);
    const auto v = convex_all(id, bodies);
    return check_alexandrov_fenchel(v[0], v[1], std::vector<VPolytope<T>>(v.begin() + 2, v.end()));
  }
  if (id == "brunn-minkowski" || id == "litvak" || id == "planar-difference" || id == "asymmetry") {
    need(id, n, 2);
    const auto v = convex_all(id, bodies);
    if (id == "brunn-minkowski") return check_brunn_minkowski(v[0], v[1]);
    if (id == "litvak") return check_litvak(v[0], v[1]);
    if (id == "planar-difference") return check_planar_difference(v[0], v[1]);
    return asymmetry(v[0], v[1]).report;
  }
  if (id == "delta-increment") {
    need(id, n, 3);
    return check_delta_increment(boxes(id, bodies[0]), boxes(id, bodies[1]), boxes(id, bodies[2]));
  }
  if (id == "projection-ball" || id == "zonoid-ellipsoid") {
    if constexpr (std::is_same_v<T, Rational>) {
      const int level = int_param(params, "level", 6);
      if (id == "projection-ball") {
        need(id, n, 1);
        return check_projection_ball(convex(id, bodies[0]), int_param(params, "axis", 0), level);
      }
      need(id, n, 2);
      const auto* z = std::get_if<Zonotope<Rational>>(&bodies[1]);
      if (!z) fail(id, "second body must be a zonotope");
      return check_zonoid_ellipsoid(convex(id, bodies[0]), *z, level);
    } else {
      fail(id, "needs rational coordinates");
    }
  }
  fail(id, "unknown inequality");
}

InequalityReport run_check_any(const std::string& id, const std::vector<CompactSet<Scalar>>& bodies,
                               const Json& params) {
  std::vector<CompactSet<Rational>> rational;
  for (const auto& b : bodies) {
    auto r = to_rational(b);
    if (!r) return run_check<Scalar>(id, bodies, params);
    rational.push_back(std::move(*r));
  }
  return run_check<Rational>(id, rational, params);
}

template InequalityReport run_check<Rational>(const std::string&, const std::vector<CompactSet<Rational>>&,
                                              const Json&);
template InequalityReport run_check<Scalar>(const std::string&, const std::vector<CompactSet<Scalar>>&, const Json&);

namespace {

bool is_box_check(const std::string& id) { return id == "delta-increment"; }

bool accepts_boxunions(const std::string& id) {
  return id == "supermodular3" || id == "ruzsa-triangle" || id == "delta-increment";
}

int body_count(const SweepConfig& c) {
  const std::string& id = c.inequality;
  const int m = int_param(c.params, "m", id == "m-supermodular" ? 3 : 2);
  if (id == "m-supermodular") return m + 1;
  if (id == "plunnecke-m" || id == "ruzsa-m" || id == "fractional-plunnecke") return m + 1;
  if (id == "alexandrov-fenchel") return c.dim;
  if (id == "brunn-minkowski" || id == "litvak" || id == "planar-difference" || id == "asymmetry" ||
      id == "zonoid-ellipsoid") {
    return 2;
  }
  if (id == "projection-ball") return 1;
  return 3;
}

CompactSet<Rational> draw(const std::string& generator, std::mt19937_64& rng, int dim, long long& resamples) {
  if (generator == "random-polytope") return random_polytope(rng, dim, 2 * dim + 2, &resamples);
  if (generator == "random-zonotope") return random_zonotope(rng, dim, dim + 1);
  if (generator == "random-triangle") return random_simplex(rng, dim, &resamples);
  if (generator == "random-boxunion") return random_boxunion(rng, dim, 3);
  static const char* kinds[] = {"random-polytope", "random-triangle", "random-zonotope"};
  return draw(kinds[rng() % 3], rng, dim, resamples);
}

BoxUnion<Rational> through_origin(BoxUnion<Rational> u) {
  const Point<Rational> shift = -u.boxes.front().lo;
  return translate(u, shift);
}

VPolytope<Rational> point_body(int dim) { return VPolytope<Rational>::origin(dim); }

// Extremal configurations: equality or the sharp case of each checker.
std::vector<CompactSet<Rational>> named(const SweepConfig& c, std::mt19937_64& rng, long long& resamples) {
  const std::string& id = c.inequality;
  const int n = c.dim;
  const VPolytope<Rational> a = random_simplex(rng, n, &resamples);
  if (id == "plunnecke3") return {a, point_body(n), point_body(n)};
  if (id == "litvak") return {a, reflect(a)};
  if (id == "planar-difference" || id == "asymmetry") {
    const Rational t = random_coordinate(rng) + 1;
    Point<Rational> v(n);
    for (int i = 0; i < n; ++i) v[i] = random_coordinate(rng);
    return {a, translate(scale(t, a), v)};
  }
  if (id == "brunn-minkowski") return {a, scale(random_coordinate(rng) + 1, a)};
  if (id == "alexandrov-fenchel") {
    std::vector<CompactSet<Rational>> out{a, scale(random_coordinate(rng) + 1, a)};
    for (int i = 2; i < n; ++i) out.push_back(random_polytope(rng, n, 2 * n + 2, &resamples));
    return out;
  }
  fail(id, "no named construction");
}

}  // namespace

void validate(const SweepConfig& c) {
  if (std::find(inequality_ids().begin(), inequality_ids().end(), c.inequality) == inequality_ids().end()) {
    throw std::invalid_argument("unknown inequality: " + c.inequality);
  }
  if (std::find(generator_ids().begin(), generator_ids().end(), c.generator) == generator_ids().end()) {
    throw std::invalid_argument("unknown generator: " + c.generator);
  }
  if (c.dim < 1 || c.dim > 4) throw std::invalid_argument("sweep dimension must be in 1..4");
  if (c.samples < 0) throw std::invalid_argument("samples must be >= 0");
  if (c.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (!c.params.is_object()) throw std::invalid_argument("params must be an object");
  const bool box_gen = c.generator == "random-boxunion";
  if (box_gen && !accepts_boxunions(c.inequality)) {
    throw std::invalid_argument(c.inequality + " needs convex bodies");
  }
  if (is_box_check(c.inequality) && !box_gen) throw std::invalid_argument(c.inequality + " needs random-boxunion");
  if ((c.inequality == "planar-difference" || c.inequality == "asymmetry") && c.dim != 2) {
    throw std::invalid_argument(c.inequality + " is planar");
  }
  if ((c.inequality == "projection-ball" || c.inequality == "zonoid-ellipsoid") && c.dim != 2 && c.dim != 3) {
    throw std::invalid_argument(c.inequality + " needs dimension 2 or 3");
  }
  if (c.inequality == "alexandrov-fenchel" && c.dim < 2) throw std::invalid_argument("alexandrov-fenchel needs n >= 2");
  if (c.generator == "named-construction") {
    static const std::vector<std::string> ok{"plunnecke3",      "litvak",    "planar-difference", "asymmetry",
                                             "brunn-minkowski", "alexandrov-fenchel"};
    if (std::find(ok.begin(), ok.end(), c.inequality) == ok.end()) {
      throw std::invalid_argument("no named construction for " + c.inequality);
    }
  }
  if (int_param(c.params, "m", 2) < 1) throw std::invalid_argument("m must be >= 1");
}

SweepInstance make_instance(const SweepConfig& c, long long index) {
  std::mt19937_64 rng = substream(c.seed, static_cast<std::uint64_t>(index));
  SweepInstance inst;
  inst.params = c.params;
  const std::string& id = c.inequality;
  if (c.generator == "named-construction") {
    inst.bodies = named(c, rng, inst.resamples);
  } else {
    const int count = body_count(c);
    for (int i = 0; i < count; ++i) inst.bodies.push_back(draw(c.generator, rng, c.dim, inst.resamples));
  }
  if (id == "delta-increment") {
    for (int i = 1; i < 3; ++i) inst.bodies[i] = through_origin(std::get<BoxUnion<Rational>>(inst.bodies[i]));
  }
  if (id == "zonoid-ellipsoid" && !std::holds_alternative<Zonotope<Rational>>(inst.bodies[1])) {
    inst.bodies[1] = random_zonotope(rng, c.dim, c.dim + 1);
  }
  if (id == "projection-ball" && !inst.params.contains("axis")) {
    inst.params["axis"] = static_cast<int>(rng() % static_cast<unsigned>(c.dim));
  }
  if (id == "m-supermodular" && !inst.params.contains("s0") && !inst.params.contains("increments")) {
    inst.params["s0"] = Json::array({0});
    Json inc = Json::array();
    for (std::size_t i = 1; i < inst.bodies.size(); ++i) inc.push_back(Json::array({i}));
    inst.params["increments"] = inc;
  }
  if (id == "compression" && !inst.params.contains("from")) {
    inst.params["from"] = Json::array({Json::array({0, 1}), Json::array({1, 2})});
    inst.params["to"] = Json::array({Json::array({1}), Json::array({0, 1, 2})});
  }
  if (id == "fractional-superadditivity" && !inst.params.contains("sets")) {
    inst.params["sets"] = Json::array({Json::array({0, 1}), Json::array({1, 2}), Json::array({0, 2})});
    inst.params["weights"] = Json::array({"1/2", "1/2", "1/2"});
  }
  return inst;
}

AggregateReport run_sweep(const SweepConfig& c) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  struct Slot {
    InequalityReport report;
    long long resamples = 0;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(c.samples));
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const long long i = next.fetch_add(1);
      if (i >= c.samples) return;
      try {
        SweepInstance inst = make_instance(c, i);
        slots[static_cast<std::size_t>(i)] = {run_check<Rational>(c.inequality, inst.bodies, inst.params),
                                              inst.resamples};
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = c.samples;
        return;
      }
    }
  };
  const int workers = static_cast<int>(std::min<long long>(c.workers, std::max<long long>(c.samples, 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  AggregateReport a;
  a.config = c;
  a.instances = c.samples;
  for (long long i = 0; i < c.samples; ++i) {
    Slot& s = slots[static_cast<std::size_t>(i)];
    a.resamples += s.resamples;
    if (s.report.degenerate) ++a.degenerate;
    if (s.report.pass) {
      ++a.passed;
    } else {
      a.failures.push_back({i, s.report});
    }
    if (s.report.ratio && (!a.max_ratio || *s.report.ratio > *a.max_ratio)) {
      a.max_ratio = *s.report.ratio;
      a.argmax = i;
      a.argmax_bodies = s.report.bodies;
    }
    a.reports.push_back(std::move(s.report));
  }
  a.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return a;
}

Json to_json(const AggregateReport& a, bool with_runtime) {
  const SweepConfig& c = a.config;
  Json out;
  out["config"] = Json{{"inequality", c.inequality}, {"dim", c.dim},         {"samples", c.samples},
                       {"generator", c.generator},   {"seed", c.seed},       {"workers", c.workers},
                       {"params", c.params}};
  out["instances"] = a.instances;
  out["passed"] = a.passed;
  out["degenerate"] = a.degenerate;
  out["resamples"] = a.resamples;
  Json failures = Json::array();
  for (const auto& f : a.failures) failures.push_back(Json{{"sample", f.sample}, {"report", to_json(f.report)}});
  out["failures"] = failures;
  if (a.max_ratio) {
    out["max_ratio"] = to_string(*a.max_ratio);
    out["max_ratio_decimal"] = to_decimal(*a.max_ratio);
    out["argmax"] = *a.argmax;
    out["argmax_bodies"] = a.argmax_bodies;
  } else {
    out["max_ratio"] = nullptr;
  }
  if (with_runtime) out["runtime_seconds"] = a.runtime_seconds;
  return out;
}

std::string to_csv(const AggregateReport& a) {
  std::ostringstream os;
  os << "id,dim,seed,sample,lhs,rhs,slack,ratio,pass,ratio_decimal\n";
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    const InequalityReport& r = a.reports[i];
    os << r.id << ',' << r.dim << ',' << a.config.seed << ',' << i << ',' << to_string(r.lhs) << ','
       << to_string(r.rhs) << ',' << to_string(r.slack) << ',' << (r.ratio ? to_string(*r.ratio) : "") << ','
       << (r.pass ? "true" : "false") << ',' << (r.ratio ? to_decimal(*r.ratio) : "") << '\n';
  }
  return os.str();
}

}  // namespace convexsum
