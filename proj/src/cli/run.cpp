#include "ehrmini/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ehrmini/cli/polytope_json.hpp"
#include "ehrmini/cli/verify.hpp"
#include "ehrmini/corpus.hpp"
#include "ehrmini/counting.hpp"
#include "ehrmini/ehrhart.hpp"
#include "ehrmini/errors.hpp"
#include "ehrmini/miniatures.hpp"
#include "ehrmini/oracle.hpp"

namespace ehrmini::cli {
namespace {

using nlohmann::json;

constexpr unsigned kDecimalDigits = 15;

enum class Format { csv, json, human };

struct RunConfig {
  std::string input;
  std::string preset;
  Format format = Format::human;
  std::uint64_t n = 0;
  std::uint64_t n_max = 0;
  std::uint64_t t_max = 0;
  bool summary = false;
};

std::string read_input(const std::string& input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  std::ifstream file(input);
  if (!file) throw PreconditionError("cannot read input file '" + input + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

LatticePolytope load_polytope(const RunConfig& cfg) {
  if (!cfg.preset.empty()) {
    if (auto p = preset(cfg.preset)) return *p;
    std::string known;
    for (const auto& name : preset_names()) known += " " + name;
    throw PreconditionError("unknown preset '" + cfg.preset + "'; known:" + known);
  }
  if (cfg.input.empty()) throw PreconditionError("no polytope given; use --input or --preset");
  return parse_polytope(read_input(cfg.input));
}

std::vector<LatticePolytope> load_parts(const RunConfig& cfg) {
  if (!cfg.preset.empty()) {
    if (auto dec = decomposition(cfg.preset)) return dec->parts;
    throw PreconditionError("unknown decomposition preset '" + cfg.preset + "'; known: diagonal-split two-squares");
  }
  if (cfg.input.empty()) throw PreconditionError("no parts given; use --input or --preset");
  return parse_polytope_list(read_input(cfg.input));
}

int do_count(const RunConfig& cfg, std::ostream& out) {
  const auto p = load_polytope(cfg);
  std::vector<LatticeCount> rows;
  for (std::uint64_t t = 0; t <= cfg.t_max; ++t) rows.push_back(lattice_count(p, t));
  if (cfg.format == Format::json) {
    json doc = json::array();
    for (const auto& r : rows) {
      doc.push_back({{"t", r.dilate}, {"closed", integer_to_json(r.closed_count)},
                     {"interior", integer_to_json(r.interior_count)}});
    }
    out << json{{"counts", doc}}.dump(2) << '\n';
  } else {
    out << "t,closed,interior\n";
    for (const auto& r : rows) out << r.dilate << ',' << r.closed_count << ',' << r.interior_count << '\n';
  }
  return kSuccess;
}

int do_ehrhart(const RunConfig& cfg, std::ostream& out) {
  const auto p = load_polytope(cfg);
  const auto ehr = ehrhart_polynomial(p);
  const bool reciprocity = check_reciprocity(ehr, cfg.t_max);
  const auto& coeffs = ehr.poly.coefficients();
  switch (cfg.format) {
    case Format::json: {
      json list = json::array();
      for (const auto& c : coeffs) list.push_back(to_string(c));
      out << json{{"coeffs", list},
                  {"polynomial", ehr.poly.to_string()},
                  {"reciprocity", reciprocity},
                  {"polytope", polytope_to_json(p)}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::csv:
      out << "k,coeff\n";
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << ',' << to_string(coeffs[k]) << '\n';
      break;
    case Format::human: {
      out << "coefficients (t^0 upward):";
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << (k ? ", " : " ") << to_string(coeffs[k]);
      out << "\nL(t) = " << ehr.poly.to_string() << "\nvolume = " << to_string(p.volume())
          << "\nreciprocity (t <= " << cfg.t_max << "): " << (reciprocity ? "PASS" : "FAIL") << '\n';
      break;
    }
  }
  return reciprocity ? kSuccess : kTheoremViolation;
}

int do_copies(const RunConfig& cfg, std::ostream& out) {
  const auto p = load_polytope(cfg);
  const auto census = copy_census(p, cfg.n);
  const std::size_t d = p.ambient_dim();
  std::vector<Integer> weighted;
  for (std::uint64_t i = 1; i <= cfg.n; ++i) {
    weighted.push_back(power(to_integer(i), d) * census.at_scale(i));
  }
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (std::uint64_t i = 1; i <= cfg.n; ++i) {
      rows.push_back({{"i", i}, {"count", integer_to_json(census.at_scale(i))},
                      {"weighted", integer_to_json(weighted[i - 1])}});
    }
    out << json{{"n", cfg.n}, {"per_scale", rows}, {"total", integer_to_json(census.total)},
                {"volume_sum", to_string(census.volume_sum)}}
                   .dump(2)
        << '\n';
    return kSuccess;
  }
  const char* prefix = cfg.format == Format::csv ? "# " : "";
  out << "i,count,i^d*count\n";
  for (std::uint64_t i = 1; i <= cfg.n; ++i) out << i << ',' << census.at_scale(i) << ',' << weighted[i - 1] << '\n';
  out << prefix << "total = " << census.total << '\n'
      << prefix << "volume_sum = " << to_string(census.volume_sum) << '\n';
  return kSuccess;
}

int do_mu(const RunConfig& cfg, std::ostream& out) {
  const auto p = load_polytope(cfg);
  const auto report = mu_report(p, cfg.n_max);
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (const auto& [n, r] : report.ratios) {
      rows.push_back({{"n", n}, {"ratio", to_string(r)}, {"decimal", to_decimal(r, kDecimalDigits)}});
    }
    out << json{{"ratios", rows},
                {"limit", to_string(report.symbolic_limit)},
                {"closed_form", to_string(report.closed_form)},
                {"convergence_constant", to_string(report.convergence_constant)},
                {"burn_in", report.burn_in}}
                   .dump(2)
        << '\n';
    return kSuccess;
  }
  const char* prefix = cfg.format == Format::csv ? "# " : "";
  out << "n,ratio_num,ratio_den,ratio_decimal\n";
  for (const auto& [n, r] : report.ratios) {
    out << n << ',' << r.get_num() << ',' << r.get_den() << ',' << to_decimal(r, kDecimalDigits) << '\n';
  }
  out << prefix << "limit = " << to_string(report.symbolic_limit) << '\n'
      << prefix << "closed_form = " << to_string(report.closed_form) << '\n'
      << prefix << "convergence_constant = " << to_string(report.convergence_constant) << '\n'
      << prefix << "burn_in = " << report.burn_in << '\n';
  return kSuccess;
}

int do_pie(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto parts = load_parts(cfg);
  const auto report = inclusion_exclusion_report(parts);
  if (cfg.format == Format::json) {
    json terms = json::array();
    for (const auto& t : report.terms) {
      terms.push_back({{"subset", t.subset}, {"sign", t.sign}, {"empty", t.empty}, {"dim", t.dim},
                       {"volume", to_string(t.volume)}, {"mu", to_string(t.mu)}});
    }
    out << json{{"terms", terms},
                {"mu", to_string(report.mu)},
                {"volume", to_string(report.volume)},
                {"hull_volume", to_string(report.hull_volume)},
                {"hull_mu", to_string(report.hull_mu)},
                {"union_consistent", report.union_consistent}}
                   .dump(2)
        << '\n';
  } else {
    const char* prefix = cfg.format == Format::csv ? "# " : "";
    out << "subset,sign,dim,volume,mu\n";
    for (const auto& t : report.terms) {
      std::string subset;
      for (auto k : t.subset) subset += (subset.empty() ? "" : "+") + std::to_string(k + 1);
      out << subset << ',' << (t.sign > 0 ? "+" : "-") << ',' << (t.empty ? std::string("empty") : std::to_string(t.dim))
          << ',' << to_string(t.volume) << ',' << to_string(t.mu) << '\n';
    }
    out << prefix << "mu = " << to_string(report.mu) << '\n'
        << prefix << "union_mu = " << to_string(report.hull_mu) << '\n'
        << prefix << "union_check = " << (report.union_consistent ? "consistent" : "violated") << '\n';
  }
  if (!report.union_consistent) {
    err << "error: volume of the hull (" << to_string(report.hull_volume)
        << ") differs from the inclusion-exclusion volume (" << to_string(report.volume)
        << "); the union is not convex\n";
    return kPrecondition;
  }
  return kSuccess;
}

int do_oracle(const RunConfig& cfg, std::ostream& out) {
  const auto p = load_polytope(cfg);
  const auto witnesses = oracle::enumerate_copies(p, cfg.n);
  if (cfg.summary) {
    const auto hist = oracle::scale_histogram(witnesses, cfg.n);
    out << "i,count\n";
    for (std::uint64_t i = 1; i <= cfg.n; ++i) out << i << ',' << hist[i - 1] << '\n';
    return kSuccess;
  }
  out << 'i';
  for (std::size_t j = 1; j <= p.ambient_dim(); ++j) out << ",a" << j;
  out << '\n';
  for (const auto& w : witnesses) {
    out << w.scale;
    for (const auto& x : w.shift) out << ',' << x;
    out << '\n';
  }
  return kSuccess;
}

int do_verify(const RunConfig& cfg, std::ostream& out) {
  const auto rows = run_verification(builtin_corpus());
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  if (cfg.format == Format::json) {
    json doc = json::array();
    for (const auto& r : rows) doc.push_back({{"suite", r.suite}, {"subject", r.subject}, {"pass", r.pass}, {"detail", r.detail}});
    out << json{{"results", doc}, {"ok", ok}}.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "suite,subject,result\n";
    for (const auto& r : rows) out << r.suite << ',' << r.subject << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  } else {
    for (const auto& r : rows) {
      out << std::left << std::setw(22) << r.suite << std::setw(16) << r.subject << (r.pass ? "PASS" : "FAIL");
      if (!r.pass) out << "  " << r.detail;
      out << '\n';
    }
    out << (ok ? "all suites passed" : "FAILURES present") << '\n';
  }
  return ok ? kSuccess : kTheoremViolation;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  auto* input = sub->add_option("--input", cfg.input, "Polytope JSON file or inline JSON document");
  auto* preset = sub->add_option("--preset", cfg.preset, "Built-in polytope");
  input->excludes(preset);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Ehrhart polynomials, horizontal lattice copies and miniature volumes", "minictl"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* count = app.add_subcommand("count", "Lattice points of tP and its interior, t = 0..t-max (CSV)");
  add_input_options(count, cfg);
  count->add_option("--t-max", cfg.t_max, "Largest dilate")->check(CLI::PositiveNumber)->default_val(5);

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and reciprocity check");
  add_input_options(ehrhart, cfg);
  ehrhart->add_option("--t-max", cfg.t_max, "Reciprocity range")->check(CLI::PositiveNumber)->default_val(4);

  auto* copies = app.add_subcommand("copies", "Horizontal lattice copies of P in nP, per scale");
  add_input_options(copies, cfg);
  copies->add_option("--n", cfg.n, "Dilate n")->required()->check(CLI::PositiveNumber);

  auto* mu = app.add_subcommand("mu", "Mean miniature volume for n = 1..n-max and its limit");
  add_input_options(mu, cfg);
  mu->add_option("--n-max", cfg.n_max, "Largest resolution")->required()->check(CLI::PositiveNumber);

  auto* pie = app.add_subcommand("pie", "Inclusion-exclusion of mu over a list of polytopes");
  pie->add_option("--input", cfg.input, "JSON list of polytopes (file or inline)");
  pie->add_option("--preset", cfg.preset, "diagonal-split or two-squares")->excludes("--input");

  auto* orc = app.add_subcommand("oracle", "Brute-force enumeration of lattice copies");
  add_input_options(orc, cfg);
  orc->add_option("--n", cfg.n, "Dilate n")->required()->check(CLI::PositiveNumber);
  orc->add_flag("--summary", cfg.summary, "Only per-scale counts");

  auto* verify = app.add_subcommand("verify", "Run every invariant suite on the built-in corpus");

  const std::pair<CLI::App*, Format> format_defaults[] = {
      {count, Format::csv}, {ehrhart, Format::human}, {copies, Format::csv}, {mu, Format::csv},
      {pie, Format::human}, {orc, Format::csv},      {verify, Format::human}};
  std::map<CLI::App*, Format> chosen;
  for (const auto& [sub, fallback] : format_defaults) {
    auto* opt = sub->add_option("--format", "Output format: csv, json or human");
    opt->check(CLI::IsMember({"csv", "json", "human"}, CLI::ignore_case));
    chosen[sub] = fallback;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.format = chosen.at(sub);
  if (auto* opt = sub->get_option("--format"); opt->count() > 0) {
    std::string value = opt->as<std::string>();
    std::transform(value.begin(), value.end(), value.begin(), [](unsigned char c) { return std::tolower(c); });
    cfg.format = value == "csv" ? Format::csv : value == "json" ? Format::json : Format::human;
  }

  return guarded(
      [&] {
        if (sub == count) return do_count(cfg, out);
        if (sub == ehrhart) return do_ehrhart(cfg, out);
        if (sub == copies) return do_copies(cfg, out);
        if (sub == mu) return do_mu(cfg, out);
        if (sub == pie) return do_pie(cfg, out, err);
        if (sub == orc) return do_oracle(cfg, out);
        return do_verify(cfg, out);
      },
      err);
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kTheoremViolation;
  }
}

}  // namespace ehrmini::cli
