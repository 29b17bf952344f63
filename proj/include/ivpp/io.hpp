#pragma once

#include <json.hpp>
#include <string>

#include "ivpp/decomposition.hpp"
#include "ivpp/rational_map.hpp"

namespace ivpp {

/// A coordinate as JSON: a number when real, {"re", "im"} otherwise, "inf"
/// for the point at infinity.
nlohmann::json to_json(const ExtendedComplex& z);
nlohmann::json to_json(const PointD& p);
nlohmann::json to_json(const OrbitTrace& trace);

/// {period, branch, convention, boundaries, sigma, tiles} plus "r" when the
/// decomposition belongs to a level. The point at infinity leads the
/// boundary list as "-inf" for left-closed intervals and closes it as "inf"
/// for right-closed ones.
nlohmann::json to_json(const ComponentDecomposition& d);

/// Indented dump with a trailing newline; doubles use the shortest
/// representation that reads back to the same value.
std::string dump(const nlohmann::json& j);

}  // namespace ivpp
