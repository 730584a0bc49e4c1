#pragma once

#include "convexsum/bodies.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace convexsum {

using Json = nlohmann::json;

/// {"a":"p/q","b":"p/q","c":"p/q","d":"p/q"}.
Json scalar_to_json(const Scalar& x);
/// Accepts the object form, a "p/q" string, or a JSON integer.
Scalar scalar_from_json(const Json& j);

template <ExactField T>
Json body_to_json(const CompactSet<T>& body);

/// Parses one tagged body.  Throws ParseError on malformed input and
/// DimensionMismatch when coordinates disagree with "dim".
CompactSet<Scalar> body_from_json(const Json& j);

/// {"bodies":[...]}; all bodies must share one ambient dimension.
std::vector<CompactSet<Scalar>> bodies_from_json(const Json& j);

/// The same body over the rationals, when every coordinate is rational.
std::optional<CompactSet<Rational>> to_rational(const CompactSet<Scalar>& body);

}  // namespace convexsum
