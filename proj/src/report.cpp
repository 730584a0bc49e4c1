#include "convexsum/report.hpp"

namespace convexsum {

void settle(InequalityReport& r) {
  r.slack = r.rhs - r.lhs;
  r.pass = sign(r.slack) >= 0;
}

Json to_json(const InequalityReport& r) {
  Json j{{"id", r.id},
         {"dim", r.dim},
         {"bodies", r.bodies},
         {"lhs", to_string(r.lhs)},
         {"rhs", to_string(r.rhs)},
         {"slack", to_string(r.slack)},
         {"pass", r.pass},
         {"constant", to_string(r.constant)},
         {"degenerate", r.degenerate},
         {"exact", r.exact}};
  if (!r.params.empty()) j["params"] = r.params;
  if (r.ratio) {
    j["ratio"] = to_string(*r.ratio);
    j["ratio_decimal"] = to_decimal(*r.ratio, 12);
  }
  if (r.tolerance) {
    j["tolerance"] = to_string(*r.tolerance);
    j["tolerance_decimal"] = to_decimal(*r.tolerance, 6);
  }
  return j;
}

}  // namespace convexsum
