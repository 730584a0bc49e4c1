#pragma once

#include "convexsum/io.hpp"

#include <optional>
#include <string>

namespace convexsum {

/// One checked inequality instance lhs <= rhs.  The constant is already
/// folded into rhs; slack = rhs - lhs and pass <=> slack >= 0.
struct InequalityReport {
  std::string id;
  int dim = 0;
  Json bodies = Json::array();
  Json params = Json::object();
  Scalar lhs;
  Scalar rhs;
  Scalar slack;
  bool pass = false;
  Scalar constant{1};
  /// Zero denominator in a ratio check (no ratio is reported).
  bool degenerate = false;
  /// lhs / (rhs / constant), for ratio-type checks.
  std::optional<Scalar> ratio;
  /// Approximation slack bound of ball-dependent checks.
  std::optional<Rational> tolerance;
  /// False when lhs or rhs is a certified rational bound instead of the exact value.
  bool exact = true;
};

/// Sets slack and pass from lhs and rhs.
void settle(InequalityReport& r);

Json to_json(const InequalityReport& r);

}  // namespace convexsum
