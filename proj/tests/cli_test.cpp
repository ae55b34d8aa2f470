#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ehrmini/cli/polytope_json.hpp"
#include "ehrmini/cli/run.hpp"
#include "ehrmini/cli/verify.hpp"
#include "ehrmini/corpus.hpp"
#include "ehrmini/errors.hpp"
#include "ehrmini/miniatures.hpp"
#include "support/brute_force.hpp"

namespace ehrmini::cli {
namespace {

using testing::q;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(ParsePolytope, Segment) { EXPECT_EQ(parse_polytope(R"({"vertices":[[0],[1]]})"), box({1})); }

TEST(ParsePolytope, Triangle) {
  EXPECT_EQ(parse_polytope(R"({"vertices":[[0,0],[1,0],[0,1]]})"), standard_simplex(2));
}

TEST(ParsePolytope, BigIntegerStrings) {
  const auto p = parse_polytope(R"({"vertices":[["0"],["100000000000000000000"]]})");
  EXPECT_EQ(p.volume(), Rational(Integer("100000000000000000000")));
  // Leading zeros are decimal, not octal.
  EXPECT_EQ(parse_polytope(R"({"vertices":[["-010"],["+019"]]})"), translate(box({29}), {Integer(-10)}));
}

TEST(ParsePolytope, NonIntegerCoordinateNamed) {
  try {
    parse_polytope(R"({"vertices":[[0,0.5]]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("0.5"), std::string::npos) << what;
    EXPECT_NE(what.find("vertex 0"), std::string::npos) << what;
    EXPECT_NE(what.find("index 1"), std::string::npos) << what;
  }
}

TEST(ParsePolytope, MalformedJsonReportsPosition) {
  try {
    parse_polytope("{\"vertices\": [[0, 0],\n  [1, 0]\n  [0, 1]]}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(ParsePolytope, SchemaErrors) {
  EXPECT_THROW(parse_polytope(R"([1, 2])"), ParseError);
  EXPECT_THROW(parse_polytope(R"({"vertices": []})"), ParseError);
  EXPECT_THROW(parse_polytope(R"({"vertices": [[0], [1, 2]]})"), ParseError);
  EXPECT_THROW(parse_polytope(R"({"vertices": [[true]]})"), ParseError);
}

TEST(ParsePolytope, RoundTrip) {
  for (const auto& [name, p] : builtin_corpus()) {
    const auto emitted = polytope_to_json(p);
    EXPECT_EQ(parse_polytope(emitted.dump()), p) << name;
    EXPECT_EQ(emitted["dim"], p.dim()) << name;
  }
}

TEST(ParsePolytopeList, BothForms) {
  const auto a = parse_polytope_list(R"([{"vertices":[[0],[1]]},{"vertices":[[1],[2]]}])");
  const auto b = parse_polytope_list(R"({"parts":[{"vertices":[[0],[1]]},{"vertices":[[1],[2]]}]})");
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a, b);
  EXPECT_THROW(parse_polytope_list("[]"), ParseError);
}

TEST(Run, MuFooterOnSquare) {
  const auto r = invoke({"mu", "--n-max", "20", "--preset", "square"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("limit = 1/10"), std::string::npos);
  EXPECT_NE(r.out.find("closed_form = 1/10"), std::string::npos);
}

TEST(Run, MuRowsAreExactWithAccurateDecimals) {
  const auto r = invoke({"mu", "--n-max", "12", "--preset", "triangle"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.front(), "n,ratio_num,ratio_den,ratio_decimal");
  int seen = 0;
  for (std::size_t k = 1; k < rows.size() && rows[k][0] != '#'; ++k) {
    std::istringstream in(rows[k]);
    std::string n, num, den, dec;
    std::getline(in, n, ',');
    std::getline(in, num, ',');
    std::getline(in, den, ',');
    std::getline(in, dec, ',');
    const Rational ratio = make_rational(Integer(num), Integer(den));
    EXPECT_EQ(ratio, mu_ratio(standard_simplex(2), std::stoul(n)));
    // The decimal is within 1e-12 of the exact value.
    const auto point = dec.find('.');
    const Rational shown =
        make_rational(Integer(dec.substr(0, point) + dec.substr(point + 1), 10), power(Integer(10), dec.size() - point - 1));
    EXPECT_LT(abs(shown - ratio), make_rational(1, power(Integer(10), 12))) << rows[k];
    ++seen;
  }
  EXPECT_EQ(seen, 12);
}

TEST(Run, CopiesTotalOnTriangle) {
  const auto r = invoke({"copies", "--n", "4", "--preset", "triangle"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(r.out);
  ASSERT_GE(rows.size(), 5u);
  EXPECT_EQ(rows[0], "i,count,i^d*count");
  EXPECT_EQ(rows[1], "1,10,10");
  EXPECT_EQ(rows[4], "4,1,16");
  EXPECT_NE(r.out.find("total = 20"), std::string::npos);
}

TEST(Run, CountCsv) {
  const auto r = invoke({"count", "--t-max", "2", "--input", R"({"vertices":[[0,0],[1,0],[0,1],[1,1]]})"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "t,closed,interior\n0,1,0\n1,4,0\n2,9,1\n");
}

TEST(Run, InputFromFile) {
  const std::string path = ::testing::TempDir() + "ehrmini_cli_triangle.json";
  std::ofstream(path) << R"({"vertices":[[0,0],[1,0],[0,1]]})";
  const auto r = invoke({"count", "--t-max", "1", "--input", path});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "t,closed,interior\n0,1,0\n1,3,0\n");
}

TEST(Run, EhrhartJson) {
  const auto r = invoke({"ehrhart", "--preset", "triangle", "--format", "json"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["coeffs"], nlohmann::json::array({"1", "3/2", "1/2"}));
  EXPECT_EQ(doc["reciprocity"], true);
}

TEST(Run, EhrhartHuman) {
  const auto r = invoke({"ehrhart", "--preset", "square"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("L(t) = t^2 + 2 t + 1"), std::string::npos) << r.out;
}

TEST(Run, OracleCsvAndSummary) {
  const auto full = invoke({"oracle", "--n", "2", "--preset", "segment"});
  EXPECT_EQ(full.code, kSuccess) << full.err;
  EXPECT_EQ(full.out, "i,a1\n1,0\n1,1\n2,0\n");
  const auto summary = invoke({"oracle", "--n", "2", "--preset", "segment", "--summary"});
  EXPECT_EQ(summary.out, "i,count\n1,2\n2,1\n");
}

TEST(Run, PiePresets) {
  const auto split = invoke({"pie", "--preset", "diagonal-split"});
  EXPECT_EQ(split.code, kSuccess) << split.err;
  EXPECT_NE(split.out.find("mu = 1/10"), std::string::npos) << split.out;
  const auto squares = invoke({"pie", "--preset", "two-squares", "--format", "csv"});
  EXPECT_EQ(squares.code, kSuccess) << squares.err;
  EXPECT_NE(squares.out.find("mu = 1/5"), std::string::npos) << squares.out;
}

TEST(Run, PieNonConvexUnionIsAPreconditionFailure) {
  const auto r = invoke({"pie", "--input", R"([{"vertices":[[0],[1]]},{"vertices":[[3],[4]]}])"});
  EXPECT_EQ(r.code, kPrecondition);
  EXPECT_NE(r.err.find("not convex"), std::string::npos);
}

TEST(Run, VerifyPasses) {
  const auto r = invoke({"verify"});
  EXPECT_EQ(r.code, kSuccess) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Verification, EveryRowPasses) {
  const auto rows = run_verification(builtin_corpus());
  EXPECT_GT(rows.size(), 40u);
  for (const auto& row : rows) EXPECT_TRUE(row.pass) << row.suite << " " << row.subject << ": " << row.detail;
}

TEST(ExitCodes, Usage) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"mu", "--preset", "square"}).code, kUsageError);               // --n-max missing
  EXPECT_EQ(invoke({"copies", "--n", "0", "--preset", "square"}).code, kUsageError);  // not positive
  EXPECT_EQ(invoke({"count", "--bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "--format", "xml", "--preset", "square"}).code, kUsageError);
}

TEST(ExitCodes, Precondition) {
  const auto malformed = invoke({"count", "--input", "{\"vertices\": [[0,0],"});
  EXPECT_EQ(malformed.code, kPrecondition);
  EXPECT_NE(malformed.err.find("line 1"), std::string::npos) << malformed.err;
  EXPECT_EQ(invoke({"count", "--preset", "dodecahedron"}).code, kPrecondition);
  EXPECT_EQ(invoke({"count", "--input", "/nonexistent/polytope.json"}).code, kPrecondition);
  EXPECT_EQ(invoke({"oracle", "--n", "40", "--preset", "square"}).code, kPrecondition);
  EXPECT_EQ(invoke({"ehrhart", "--input", R"({"vertices":[[0,0],[1,1]]})"}).code, kPrecondition);
}

TEST(ExitCodes, TheoremViolation) {
  std::ostringstream err;
  EXPECT_EQ(guarded([]() -> int { throw ConsistencyError("check node mismatch"); }, err), kTheoremViolation);
  EXPECT_NE(err.str().find("check node mismatch"), std::string::npos);
  EXPECT_EQ(guarded([]() -> int { throw TheoremViolation("limit mismatch"); }, err), kTheoremViolation);
  EXPECT_EQ(guarded([]() -> int { throw ResourceError("too big"); }, err), kPrecondition);
  EXPECT_EQ(guarded([] { return 0; }, err), kSuccess);
}

TEST(ExitCodes, Distinct) {
  EXPECT_NE(kUsageError, kPrecondition);
  EXPECT_NE(kPrecondition, kTheoremViolation);
  EXPECT_NE(kUsageError, kTheoremViolation);
}

}  // namespace
}  // namespace ehrmini::cli
