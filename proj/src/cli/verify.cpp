#include "ehrmini/cli/verify.hpp"

#include <algorithm>
#include <functional>

#include "ehrmini/counting.hpp"
#include "ehrmini/ehrhart.hpp"
#include "ehrmini/miniatures.hpp"
#include "ehrmini/oracle.hpp"

namespace ehrmini::cli {
namespace {

// A check returns an empty string on success, or a description of the
// first discrepancy.
using Check = std::function<std::string()>;

VerifyRow run_check(std::string suite, std::string subject, const Check& check) {
  VerifyRow row{std::move(suite), std::move(subject), false, {}};
  try {
    row.detail = check();
    row.pass = row.detail.empty();
  } catch (const std::exception& e) {
    row.detail = e.what();
  }
  return row;
}

std::string ehrhart_shape(const LatticePolytope& p) {
  const auto ehr = ehrhart_polynomial(p);
  const std::size_t d = p.ambient_dim();
  if (ehr.poly.constant() != 1) return "constant term " + to_string(ehr.poly.constant());
  if (ehr.poly.degree() != static_cast<int>(d)) return "degree " + std::to_string(ehr.poly.degree());
  if (ehr.poly.leading() != p.volume()) {
    return "leading coefficient " + to_string(ehr.poly.leading()) + " != volume " + to_string(p.volume());
  }
  for (const auto& c : ehr.poly.coefficients()) {
    if (!is_integer(c * Rational(factorial(d)))) return "d! * " + to_string(c) + " is not integral";
  }
  return {};
}

std::string pyramid_identity(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  const auto h = copy_polynomial(p);
  if (h != ehrhart_polynomial(pyramid(p)).poly.shifted(Rational(-1))) return "H_P differs from L_Pyr(t-1)";
  if (h.constant() != 0) return "constant term " + to_string(h.constant());
  if (h.leading() != p.volume() / Rational(static_cast<unsigned long>(d + 1))) return "leading coefficient";
  for (const auto& c : h.coefficients()) {
    if (!is_integer(c * Rational(factorial(d + 1)))) return "(d+1)! * " + to_string(c) + " is not integral";
  }
  for (std::uint64_t t = 1; t <= d + 3; ++t) {
    if (copy_census(p, t).total != h(Rational(static_cast<unsigned long>(t))).get_num()) {
      return "census total differs at t = " + std::to_string(t);
    }
  }
  return {};
}

std::string numerator_lead(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  const Rational expected = make_rational(factorial(d) * factorial(d), factorial(2 * d + 1)) * p.volume() * p.volume();
  const auto w = miniature_volume_numerator(p);
  if (w.leading() != expected) return "leading coefficient " + to_string(w.leading()) + " != " + to_string(expected);
  return {};
}

std::string oracle_agreement(const LatticePolytope& p) {
  const std::uint64_t n_max = p.ambient_dim() >= 3 ? 4 : 6;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto census = copy_census(p, n);
    const auto witnesses = oracle::enumerate_copies(p, n);
    if (oracle::scale_histogram(witnesses, n) != census.per_scale) return "per-scale counts at n = " + std::to_string(n);
    if (oracle::average_miniature_volume(p, n) != mu_ratio(p, n)) return "mean volume at n = " + std::to_string(n);
  }
  return {};
}

std::string sum_product() {
  for (unsigned p = 1; p <= 4; ++p) {
    for (unsigned q = 1; q <= 4; ++q) {
      const auto poly = oracle::sum_prod_poly(p, q);
      if (poly.leading() != oracle::beta_factorial(p, q)) return "p=" + std::to_string(p) + ", q=" + std::to_string(q);
      for (std::uint64_t n = 1; n <= 10; ++n) {
        if (oracle::sum_prod_lower(p, q, n) != oracle::sum_prod_upper(p, q, n)) return "index forms differ";
      }
    }
  }
  return {};
}

std::string inclusion_exclusion(const std::vector<LatticePolytope>& parts, const LatticePolytope& whole) {
  const auto report = inclusion_exclusion_report(parts);
  if (!report.union_consistent) return "union volume check failed";
  if (report.mu != mu_limit_symbolic(whole)) return "mu " + to_string(report.mu);
  return {};
}

}  // namespace

std::vector<VerifyRow> run_verification(const std::vector<NamedPolytope>& corpus) {
  std::vector<VerifyRow> rows;
  for (const auto& [name, p] : corpus) {
    rows.push_back(run_check("ehrhart-shape", name, [&] { return ehrhart_shape(p); }));
    rows.push_back(run_check("reciprocity", name, [&]() -> std::string {
      return check_reciprocity(p, 4) ? "" : "L_P(-t) disagrees with interior counts";
    }));
    rows.push_back(run_check("pyramid-identity", name, [&] { return pyramid_identity(p); }));
    rows.push_back(run_check("mu-limit", name, [&]() -> std::string {
      const auto limit = mu_limit_symbolic(p);
      return limit == mu_closed_form(p) ? "" : to_string(limit);
    }));
    rows.push_back(run_check("numerator-lead", name, [&] { return numerator_lead(p); }));
    rows.push_back(run_check("oracle", name, [&] { return oracle_agreement(p); }));
  }
  rows.push_back(run_check("sum-product", "p,q<=4", sum_product));
  for (const auto& dec : builtin_decompositions()) {
    rows.push_back(run_check("inclusion-exclusion", dec.name, [&] { return inclusion_exclusion(dec.parts, dec.whole); }));
  }
  return rows;
}

}  // namespace ehrmini::cli
