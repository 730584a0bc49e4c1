#pragma once

#include "convexsum/checkers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace convexsum {

/// Identifiers accepted by run_check, in a fixed order.
const std::vector<std::string>& inequality_ids();

/// Runs the checker `id` on a body list.  Layout by id:
///   supermodular3, ruzsa-triangle                 A B C (any compact sets)
///   plunnecke3, xiao, fenchel-local,
///   triangle-variant                              A B C (convex)
///   m-supermodular                                B_1..B_k; params s0, increments (index lists;
///                                                 default s0 = [], increments = singletons)
///   compression                                   B_1..B_k; params from, to (lists of index lists)
///   fractional-superadditivity                    A_1..A_k; params sets, weights
///   plunnecke-m, ruzsa-m                          A B_1..B_m
///   fractional-plunnecke                          A B_1..B_m; params k, optional c
///   alexandrov-fenchel                            K1 K2 C_1..C_{n-2}
///   brunn-minkowski, litvak, planar-difference,
///   asymmetry                                     two convex bodies
///   delta-increment                               three box unions
///   projection-ball                               K; params axis, level
///   zonoid-ellipsoid                              K Z (Z a zonotope); params level
/// Zonotopes count as convex.  Throws std::invalid_argument (wrong body
/// count or kind, unknown id) and the checkers' own exceptions.
template <ExactField T>
InequalityReport run_check(const std::string& id, const std::vector<CompactSet<T>>& bodies, const Json& params);

/// Runs over the rationals whenever all coordinates are rational.
InequalityReport run_check_any(const std::string& id, const std::vector<CompactSet<Scalar>>& bodies,
                               const Json& params);

/// Body sources of a sweep.
///   random-polytope    hull of 2n+2 points of the unit box
///   random-zonotope    n+1 generators
///   random-triangle    random simplex (a triangle in the plane)
///   random-boxunion    union of 3 boxes
///   mixed              each body drawn from the first three
///   named-construction the extremal configuration of the checker with a random first body
const std::vector<std::string>& generator_ids();

struct SweepConfig {
  std::string inequality = "plunnecke3";
  int dim = 2;
  long long samples = 100;
  std::string generator = "random-polytope";
  std::uint64_t seed = 1;
  int workers = 1;
  /// Passed to run_check; also read by the generator (m for the number of
  /// summands of m-body checks).
  Json params = Json::object();
};

/// Throws std::invalid_argument on an unknown id, unsupported generator or
/// dimension, or nonpositive counts.
void validate(const SweepConfig& config);

/// Bodies and params of one sample.  Deterministic in (config, index).
struct SweepInstance {
  std::vector<CompactSet<Rational>> bodies;
  Json params;
  long long resamples = 0;
};
SweepInstance make_instance(const SweepConfig& config, long long index);

struct SweepFailure {
  long long sample = 0;
  InequalityReport report;
};

struct AggregateReport {
  SweepConfig config;
  long long instances = 0;
  long long passed = 0;
  long long degenerate = 0;
  long long resamples = 0;
  std::vector<SweepFailure> failures;
  /// Exact maximum over the samples that report a ratio; first index on ties.
  std::optional<Scalar> max_ratio;
  std::optional<long long> argmax;
  Json argmax_bodies;
  /// Per-sample reports in sample order.
  std::vector<InequalityReport> reports;
  double runtime_seconds = 0;
};

AggregateReport run_sweep(const SweepConfig& config);

/// runtime_seconds is the only field that varies between equal runs and is
/// left out when `with_runtime` is false.
Json to_json(const AggregateReport& a, bool with_runtime = true);

/// Columns id, dim, seed, sample, lhs, rhs, slack, ratio, pass, ratio_decimal.
std::string to_csv(const AggregateReport& a);

}  // namespace convexsum
