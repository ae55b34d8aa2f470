#include "ehrmini/cli/polytope_json.hpp"

#include <regex>
#include <string>

#include "ehrmini/errors.hpp"

namespace ehrmini::cli {
namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what(),
                     line, column);
  }
}

Integer coordinate(const json& value, std::size_t vertex, std::size_t index) {
  const auto where = " at vertex " + std::to_string(vertex) + ", index " + std::to_string(index);
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()), 10);
    return Integer(std::to_string(value.get<std::int64_t>()), 10);
  }
  if (value.is_string()) {
    static const std::regex integer_literal("[+-]?[0-9]+");
    const auto& s = value.get_ref<const std::string&>();
    if (std::regex_match(s, integer_literal)) return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  }
  throw ParseError("non-integer coordinate " + value.dump() + where);
}

LatticePolytope polytope_from(const json& doc, const std::string& context) {
  if (!doc.is_object() || !doc.contains("vertices")) {
    throw ParseError(context + "expected an object with a \"vertices\" array");
  }
  const json& rows = doc.at("vertices");
  if (!rows.is_array() || rows.empty()) throw ParseError(context + "\"vertices\" must be a nonempty array");
  std::vector<IntVector> points;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw ParseError(context + "vertex " + std::to_string(i) + " is not an array");
    IntVector v;
    for (std::size_t j = 0; j < rows[i].size(); ++j) v.push_back(coordinate(rows[i][j], i, j));
    points.push_back(std::move(v));
  }
  try {
    return LatticePolytope::from_vertices(points);
  } catch (const ConstructionError& e) {
    throw ParseError(context + e.what());
  }
}

}  // namespace

LatticePolytope parse_polytope(std::string_view text) { return polytope_from(parse_document(text), ""); }

std::vector<LatticePolytope> parse_polytope_list(std::string_view text) {
  json doc = parse_document(text);
  if (doc.is_object() && doc.contains("parts")) doc = doc.at("parts");
  if (!doc.is_array() || doc.empty()) throw ParseError("expected a nonempty array of polytopes");
  std::vector<LatticePolytope> parts;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    parts.push_back(polytope_from(doc[k], "part " + std::to_string(k) + ": "));
  }
  return parts;
}

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json polytope_to_json(const LatticePolytope& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(integer_to_json(x));
    vertices.push_back(std::move(row));
  }
  json halfspaces = json::array();
  for (const auto& h : p.halfspaces()) {
    json normal = json::array();
    for (const auto& x : h.normal) normal.push_back(integer_to_json(x));
    halfspaces.push_back({{"normal", std::move(normal)}, {"offset", integer_to_json(h.offset)}});
  }
  return {{"vertices", std::move(vertices)},
          {"halfspaces", std::move(halfspaces)},
          {"dim", p.dim()},
          {"volume", to_string(p.volume())}};
}

}  // namespace ehrmini::cli
