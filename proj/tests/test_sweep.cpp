#include "doctest.h"

#include "convexsum/random.hpp"
#include "convexsum/sweep.hpp"

using namespace convexsum;

TEST_CASE("splitmix64 reference values") {
  // First two outputs of the reference generator seeded with 0.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("substreams depend only on seed and index") {
  auto a = substream(7, 3);
  auto b = substream(7, 3);
  auto c = substream(7, 4);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
}

TEST_CASE("random bodies") {
  std::mt19937_64 rng(1);
  long long resamples = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto p = random_polytope(rng, n, 2 * n + 2, &resamples);
      CHECK(p.affine_dim() == n);
      CHECK(sign(p.volume()) > 0);
      CHECK(random_simplex(rng, n, &resamples).size() == n + 1);
      for (Index j = 0; j < p.size(); ++j) {
        for (int i = 0; i < n; ++i) {
          CHECK(p.vertices()(i, j) >= 0);
          CHECK(p.vertices()(i, j) <= 1);
          CHECK(boost::multiprecision::denominator(p.vertices()(i, j)) <= 65536);
        }
      }
    }
  }
  const auto u = random_boxunion(rng, 2, 3);
  CHECK(u.boxes.size() == 3);
  for (const auto& b : u.boxes) CHECK((b.lo.array() < b.hi.array()).all());
}

TEST_CASE("sweep is independent of the worker count") {
  SweepConfig c;
  c.inequality = "plunnecke3";
  c.dim = 2;
  c.samples = 40;
  c.generator = "mixed";
  c.seed = 99;
  c.workers = 1;
  const Json one = to_json(run_sweep(c), false);
  c.workers = 3;
  Json three = to_json(run_sweep(c), false);
  three["config"]["workers"] = 1;
  CHECK(one.dump() == three.dump());
  CHECK(one["failures"].empty());
  CHECK(one["instances"] == 40);
}

TEST_CASE("sweep aggregate fields") {
  SweepConfig c;
  c.inequality = "plunnecke3";
  c.dim = 2;
  c.samples = 5;
  c.generator = "named-construction";
  const AggregateReport a = run_sweep(c);
  CHECK(*a.max_ratio == Scalar(1));
  CHECK(*a.argmax == 0);
  const std::string csv = to_csv(a);
  CHECK(csv.rfind("id,dim,seed,sample,lhs,rhs,slack,ratio,pass,ratio_decimal\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

  c.inequality = "delta-increment";
  c.generator = "random-boxunion";
  c.samples = 10;
  const AggregateReport d = run_sweep(c);
  CHECK(d.failures.empty());
  CHECK_FALSE(d.max_ratio.has_value());

  c.inequality = "m-supermodular";
  c.generator = "random-polytope";
  c.params = Json{{"m", 2}};
  CHECK(run_sweep(c).failures.empty());
}

TEST_CASE("sweep config validation") {
  SweepConfig c;
  c.inequality = "nonsense";
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.inequality = "plunnecke3";
  c.generator = "random-boxunion";
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.generator = "random-polytope";
  c.workers = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.workers = 1;
  c.inequality = "planar-difference";
  c.dim = 3;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("dispatcher body layout") {
  std::mt19937_64 rng(4);
  std::vector<CompactSet<Scalar>> two;
  for (int i = 0; i < 2; ++i) {
    const auto p = random_polytope(rng, 2, 5);
    PointMatrix<Scalar> m = p.vertices().unaryExpr([](const Rational& x) { return Scalar(x); });
    two.push_back(VPolytope<Scalar>(m));
  }
  CHECK(run_check_any("litvak", two, Json::object()).pass);
  CHECK_THROWS_AS(run_check_any("plunnecke3", two, Json::object()), std::invalid_argument);
  CHECK_THROWS_AS(run_check_any("no-such-check", two, Json::object()), std::invalid_argument);
  CHECK_THROWS_AS(run_check_any("xiao", {two[0], two[1], two[0]}, Json{{"j", "x"}}), ParseError);
  const auto proj = run_check_any("projection-ball", {two[0]}, Json{{"level", 4}});
  CHECK(proj.pass);
  CHECK(proj.tolerance.has_value());
}
