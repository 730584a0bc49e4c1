// convexsum: check inequalities on bodies from JSON, run seeded sweeps, and
// emit the named constructions.
//
// Exit codes: 0 pass, 1 inequality failure, 2 input error, 3 degenerate instance.

#include "convexsum/constructions.hpp"
#include "convexsum/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace convexsum;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kDegenerate = 3;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json parse_params(const std::string& text) {
  if (text.empty()) return Json::object();
  try {
    Json j = Json::parse(text);
    if (!j.is_object()) throw ParseError("--params must be a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("--params: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write " + out);
  f << text;
}

int check_exit(const InequalityReport& r) {
  if (r.degenerate) return kDegenerate;
  return r.pass ? kPass : kFail;
}

struct CheckArgs {
  std::string file;
  std::string inequality;
  std::string params;
  std::string out;
};

int run_check_cmd(const CheckArgs& a) {
  const Json doc = read_json_file(a.file);
  const auto bodies = bodies_from_json(doc);
  Json params = doc.contains("params") ? doc.at("params") : Json::object();
  if (!params.is_object()) throw ParseError("params must be an object");
  params.update(parse_params(a.params));
  const InequalityReport r = run_check_any(a.inequality, bodies, params);
  emit(to_json(r).dump(2) + "\n", a.out);
  return check_exit(r);
}

struct SweepArgs {
  SweepConfig config;
  std::string params;
  std::string format = "json";
  std::string out;
};

int run_sweep_cmd(SweepArgs a) {
  a.config.params = parse_params(a.params);
  const AggregateReport r = run_sweep(a.config);
  emit(a.format == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n", a.out);
  if (a.format == "csv") std::cerr << to_json(r).dump() << "\n";
  return r.failures.empty() ? kPass : kFail;
}

struct ConstructArgs {
  std::string name;
  std::string beta = "10";
  long m = 0;
  long l = 0;
  std::string w;
  int n = 3;
  std::string a = "1";
  std::string b = "1";
  std::vector<std::string> intervals{"0:1"};
  std::string out;
  std::string bodies_out;
};

BoxUnion<Rational> parse_intervals(const std::vector<std::string>& items) {
  BoxUnion<Rational> u;
  u.dim = 1;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("interval must be lo:hi, got " + item);
    const Rational lo = parse_rational(item.substr(0, colon));
    const Rational hi = parse_rational(item.substr(colon + 1));
    if (hi < lo) throw ParseError("interval with lo > hi: " + item);
    u.boxes.push_back({Point<Rational>::Constant(1, lo), Point<Rational>::Constant(1, hi)});
  }
  return u;
}

int run_construct_cmd(const ConstructArgs& a) {
  Json out;
  Json bodies = Json::array();
  if (a.name == "ruzsa-counterexample") {
    std::optional<long> m;
    std::optional<long> l;
    if (a.m > 0) m = a.m;
    if (a.l > 0) l = a.l;
    const RuzsaCounterexample ex = build_ruzsa_counterexample(parse_rational(a.beta), m, l);
    out["report"] = to_json(ex.report);
    if (!a.bodies_out.empty()) {
      const RuzsaThickening t = ruzsa_thickening(ex.m, ex.l, ex.epsilon);
      bodies.push_back(body_to_json<Scalar>(CompactSet<Scalar>(t.a)));
      bodies.push_back(body_to_json<Scalar>(CompactSet<Scalar>(t.b)));
    }
  } else if (a.name == "star") {
    std::optional<Rational> w;
    if (!a.w.empty()) w = parse_rational(a.w);
    const StarExample ex = build_star_example(a.m > 0 ? a.m : 10, w);
    out["report"] = to_json(ex.report);
    bodies = ex.report.bodies;
  } else if (a.name == "lower-bound-table") {
    Json rows = Json::array();
    for (const auto& row : lower_bound_table(a.n)) {
      rows.push_back(Json{{"i", row.i}, {"j", row.j}, {"k", row.k}, {"value", to_string(row.value)}});
    }
    const LowerBoundRow best = max_lower_bound(a.n);
    out["n"] = a.n;
    out["table"] = rows;
    out["max"] = Json{{"i", best.i}, {"j", best.j}, {"k", best.k}, {"value", to_string(best.value)}};
  } else if (a.name == "lower-bound-growth") {
    out["report"] = to_json(check_lower_bound_growth(a.n));
  } else if (a.name == "interval-case") {
    const InequalityReport r = interval_case_check(parse_rational(a.a), parse_rational(a.b), parse_intervals(a.intervals));
    out["report"] = to_json(r);
    bodies = r.bodies;
  } else {
    throw std::invalid_argument("unknown construction: " + a.name);
  }
  emit(out.dump(2) + "\n", a.out);
  if (!a.bodies_out.empty()) emit(Json{{"bodies", bodies}}.dump(2) + "\n", a.bodies_out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Minkowski-sum volume inequalities"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check one inequality on bodies read from a JSON file");
  check_cmd->add_option("file", check.file, "Bodies JSON ({\"bodies\": [...], optional \"params\"})")->required();
  check_cmd->add_option("--inequality", check.inequality, "Inequality id")
      ->required()
      ->check(CLI::IsMember(inequality_ids()));
  check_cmd->add_option("--params", check.params, "Extra params as a JSON object");
  check_cmd->add_option("--out", check.out, "Write the report here instead of stdout");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a seeded batch of random instances");
  sweep_cmd->add_option("--inequality", sweep.config.inequality, "Inequality id")
      ->check(CLI::IsMember(inequality_ids()));
  sweep_cmd->add_option("--dim", sweep.config.dim, "Ambient dimension")->check(CLI::Range(1, 4));
  sweep_cmd->add_option("--samples", sweep.config.samples, "Number of samples")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", sweep.config.seed, "64-bit seed");
  sweep_cmd->add_option("--workers", sweep.config.workers, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--generator", sweep.config.generator, "Body generator")->check(CLI::IsMember(generator_ids()));
  sweep_cmd->add_option("--params", sweep.params, "Checker params as a JSON object");
  sweep_cmd->add_option("--format", sweep.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--out", sweep.out, "Output file (default stdout)");

  ConstructArgs cons;
  auto* cons_cmd = app.add_subcommand("construct", "Build a named construction and its report");
  cons_cmd->add_option("name", cons.name, "ruzsa-counterexample, star, lower-bound-table, lower-bound-growth, interval-case")
      ->required()
      ->check(CLI::IsMember({"ruzsa-counterexample", "star", "lower-bound-table", "lower-bound-growth", "interval-case"}));
  cons_cmd->add_option("--beta", cons.beta, "ruzsa-counterexample: target constant");
  cons_cmd->add_option("--m", cons.m, "ruzsa-counterexample, star: m");
  cons_cmd->add_option("--l", cons.l, "ruzsa-counterexample: l");
  cons_cmd->add_option("--w", cons.w, "star: arm half-width (default 1/m^2)");
  cons_cmd->add_option("--n", cons.n, "lower-bound-table, lower-bound-growth: dimension");
  cons_cmd->add_option("--a", cons.a, "interval-case: length of A");
  cons_cmd->add_option("--b", cons.b, "interval-case: length of B");
  cons_cmd->add_option("--interval", cons.intervals, "interval-case: lo:hi pieces of C");
  cons_cmd->add_option("--out", cons.out, "Output file for the report (default stdout)");
  cons_cmd->add_option("--bodies-out", cons.bodies_out, "Write the bodies JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (check_cmd->parsed()) return run_check_cmd(check);
    if (sweep_cmd->parsed()) return run_sweep_cmd(sweep);
    return run_construct_cmd(cons);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return kInputError;
}
