#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ehrmini/geometry.hpp"

namespace ehrmini::cli {

/// Parses {"vertices": [[int, ...], ...]}. Coordinates are JSON integers or
/// decimal integer strings (for values beyond 64 bits). Derived fields
/// ("halfspaces", "volume", ...) are accepted and ignored. Throws ParseError
/// with line/column for malformed JSON and a message naming the offending
/// value for schema violations.
LatticePolytope parse_polytope(std::string_view text);

/// A JSON array of polytope objects, or {"parts": [...]}.
std::vector<LatticePolytope> parse_polytope_list(std::string_view text);

nlohmann::json polytope_to_json(const LatticePolytope& p);
nlohmann::json integer_to_json(const Integer& z);

}  // namespace ehrmini::cli
