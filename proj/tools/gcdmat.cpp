// Command-line frontend: structural analysis, matrix construction, exact
// determinants and inverses, divisibility decisions, validation campaigns
// and frontier search, with machine-readable JSON output by default.
//
// Exit codes, uniform across commands:
//   0 success / affirmative verdict
//   1 negative verdict (non-integral quotient, violations found)
//   2 usage or parse error
//   3 undecidable (singular divisor matrix)

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gcdmat/determinants.hpp"
#include "gcdmat/divisibility.hpp"
#include "gcdmat/explorer.hpp"
#include "gcdmat/inverses.hpp"
#include "gcdmat/io_json.hpp"
#include "gcdmat/structure_checks.hpp"

namespace {

using nlohmann::json;
using namespace gcdmat;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecidable = 3;

struct GlobalOpts {
  std::string format = "json";
  int verbosity = 0;
  unsigned max_power_cap = 16;
};

void check_power_cap(const GlobalOpts& g, unsigned a, unsigned b = 1) {
  if (a < 1 || b < 1) throw ConfigError("powers must be >= 1");
  if (a > g.max_power_cap || b > g.max_power_cap)
    throw ConfigError("power exceeds --max-power-cap (" + std::to_string(g.max_power_cap) + ")");
}

std::vector<PowerPair> parse_powers(const std::string& spec, const GlobalOpts& g) {
  std::vector<PowerPair> pairs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("invalid power pair: '" + item + "'");
    unsigned a = 0, b = 0;
    try {
      a = static_cast<unsigned>(std::stoul(item.substr(0, colon)));
      b = static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError("invalid power pair: '" + item + "'");
    }
    check_power_cap(g, a, b);
    pairs.push_back(PowerPair::of(a, b));
  }
  if (pairs.empty()) throw ParseError("no power pairs given");
  return pairs;
}

std::vector<PairKind> parse_kinds(const std::string& spec) {
  if (spec == "all")
    return {PairKind::kGcdGcd, PairKind::kGcdLcm, PairKind::kLcmLcm};
  std::vector<PairKind> kinds;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) kinds.push_back(parse_pair_kind(item));
  if (kinds.empty()) throw ParseError("no pair kinds given");
  return kinds;
}

void emit(const GlobalOpts& g, const json& doc, const std::string& text) {
  if (g.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

int cmd_analyze(const GlobalOpts& g, const std::string& set_literal) {
  const GcdSet s = GcdSet::parse(set_literal);
  const StructureProfile p = analyze(s);

  std::ostringstream text;
  text << "set: " << s.str() << "\n"
       << "gcd_closed: " << bool_str(p.gcd_closed) << "\n"
       << "factor_closed: " << bool_str(p.factor_closed) << "\n"
       << "divisor_chain: " << bool_str(p.divisor_chain) << "\n"
       << "max_gtd: " << p.max_gtd << "\n"
       << "condition_G: " << bool_str(p.condition_g) << "\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    text << "G(" << s[k].str() << ") = {";
    for (std::size_t i = 0; i < p.gtd[k].size(); ++i)
      text << (i ? "," : "") << p.gtd[k][i].str();
    text << "}\n";
  }
  if (p.violation_witness) {
    const auto& w = *p.violation_witness;
    text << "witness: (" << w.x.str() << "," << w.y1.str() << "," << w.y2.str() << ") "
         << w.clause << "\n";
  }
  if (g.verbosity > 0 && p.gcd_closed) {
    for (const auto& w : condition_g_violations(s))
      text << "violation: (" << w.x.str() << "," << w.y1.str() << "," << w.y2.str() << ") "
           << w.clause << "\n";
  }
  emit(g, json_of(s, p), text.str());
  return kExitOk;
}

ExactMatrix build_by_kind(const GcdSet& s, const std::string& kind, unsigned a) {
  if (kind == "gcd") return build_gcd_matrix(s, ArithmeticFn::power(a));
  if (kind == "lcm") return build_lcm_matrix(s, a);
  throw ParseError("invalid matrix kind: '" + kind + "'");
}

int cmd_matrix(const GlobalOpts& g, const std::string& set_literal, const std::string& kind,
               unsigned a) {
  check_power_cap(g, a);
  const GcdSet s = GcdSet::parse(set_literal);
  const ExactMatrix m = build_by_kind(s, kind, a);
  emit(g, json{{"set", json_of(s)}, {"kind", kind}, {"a", a}, {"matrix", json_of(m)}},
       format_matrix(m));
  return kExitOk;
}

int cmd_det(const GlobalOpts& g, const std::string& set_literal, const std::string& kind,
            unsigned a, const std::string& method) {
  check_power_cap(g, a);
  const GcdSet s = GcdSet::parse(set_literal);
  const ExactMatrix m = build_by_kind(s, kind, a);

  std::optional<Rational> oracle, structured;
  if (method == "oracle" || method == "auto" || method == "both") oracle = det_oracle(m);
  if (method == "structured" || method == "both" ||
      (method == "auto" && is_gcd_closed(s)))
    structured = (kind == "gcd") ? det_gcd_structured(s, a) : det_lcm_structured(s, a);
  if (!oracle && !structured) throw ParseError("invalid method: '" + method + "'");

  const Rational& value = oracle ? *oracle : *structured;
  json doc{{"set", json_of(s)}, {"kind", kind}, {"a", a}, {"det", value.str()}};
  if (oracle) doc["oracle"] = oracle->str();
  if (structured) doc["structured"] = structured->str();
  if (oracle && structured) doc["agree"] = (*oracle == *structured);
  emit(g, doc, value.str() + "\n");
  if (oracle && structured && *oracle != *structured) return kExitNegative;
  return kExitOk;
}

int cmd_inverse(const GlobalOpts& g, const std::string& set_literal, const std::string& kind,
                unsigned a, const std::string& method) {
  check_power_cap(g, a);
  const GcdSet s = GcdSet::parse(set_literal);
  const ExactMatrix m = build_by_kind(s, kind, a);

  ExactMatrix inv;
  if (method == "structured" || (method == "auto" && is_gcd_closed(s)))
    inv = (kind == "gcd") ? inverse_gcd_structured(s, a) : inverse_lcm_structured(s, a);
  else if (method == "oracle" || method == "auto")
    inv = inverse_oracle(m);
  else
    throw ParseError("invalid method: '" + method + "'");

  emit(g, json{{"set", json_of(s)}, {"kind", kind}, {"a", a}, {"inverse", json_of(inv)}},
       format_matrix(inv));
  return kExitOk;
}

int cmd_divides(const GlobalOpts& g, const std::string& set_literal, unsigned a, unsigned b,
                const std::string& kind, bool include_quotient) {
  check_power_cap(g, a, b);
  const GcdSet s = GcdSet::parse(set_literal);
  const DivisibilityReport r = divides(s, a, b, parse_pair_kind(kind));

  std::ostringstream text;
  if (r.status == ReportStatus::kSingularDivisor) {
    text << "status: singular-divisor\n";
  } else {
    text << "integral: " << bool_str(r.integral) << "\n";
    if (r.witness)
      text << "witness: (" << r.witness->row << "," << r.witness->col << ") = "
           << r.witness->value.str() << "\n";
    if (include_quotient) text << format_matrix(r.quotient);
  }
  emit(g, json_of(r, include_quotient), text.str());
  if (r.status == ReportStatus::kSingularDivisor) return kExitUndecidable;
  return r.integral ? kExitOk : kExitNegative;
}

struct EnumFlags {
  long max_element = 0;
  std::size_t max_size = 0;
  long lattice = 0;
  std::string set_file;
};

std::vector<GcdSet> sets_from_flags(const EnumFlags& f, bool factor_closed_mode = false) {
  if (!f.set_file.empty()) {
    std::ifstream in(f.set_file);
    if (!in) throw ConfigError("cannot open set file: " + f.set_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_set_file(buffer.str());
  }
  EnumConfig cfg;
  if (f.lattice > 0) {
    cfg.mode = EnumMode::kDivisorLattice;
    cfg.lattice_root = f.lattice;
    cfg.max_element = f.lattice;
  } else {
    cfg.mode = factor_closed_mode ? EnumMode::kFactorClosed : EnumMode::kGcdClosed;
    cfg.max_element = f.max_element;
  }
  if (f.max_size > 0) cfg.max_size = f.max_size;
  return collect_sets(cfg);
}

class FindingWriter {
 public:
  explicit FindingWriter(const std::string& path) {
    if (!path.empty()) {
      out_.open(path, std::ios::app);
      if (!out_) throw ConfigError("cannot open findings file: " + path);
    }
  }
  FindingSink sink() {
    if (!out_.is_open()) return {};
    return [this](const Finding& f) {
      out_ << json_of(f).dump() << "\n";
      out_.flush();  // findings survive interruption
    };
  }

 private:
  std::ofstream out_;
};

int cmd_validate(const GlobalOpts& g, const EnumFlags& flags, const std::string& powers_spec,
                 const std::string& kinds_spec, const std::string& out_path, bool strict_all,
                 int threads) {
  const std::vector<PowerPair> powers = parse_powers(powers_spec, g);
  const std::vector<PairKind> kinds = parse_kinds(kinds_spec);
  const std::vector<GcdSet> sets = sets_from_flags(flags);

  FindingWriter writer(out_path);
  const CampaignSummary summary = run_campaign_on(sets, powers, kinds, threads, writer.sink());

  std::ostringstream text;
  text << "sets_examined: " << summary.sets_examined << "\n"
       << "violations: " << summary.violations.size() << "\n"
       << "info_findings: " << summary.info_findings << "\n"
       << "warn_findings: " << summary.warn_findings << "\n"
       << "runtime_ms: " << summary.elapsed_ms << "\n";
  emit(g, json_of(summary), text.str());

  if (!summary.violations.empty()) return kExitNegative;
  if (strict_all && (summary.info_findings > 0 || summary.warn_findings > 0))
    return kExitNegative;
  return kExitOk;
}

int cmd_search(const GlobalOpts& g, const EnumFlags& flags, const std::string& powers_spec,
               const std::string& out_path, int threads) {
  const std::vector<PowerPair> powers = parse_powers(powers_spec, g);
  EnumConfig cfg;
  if (flags.lattice > 0) {
    cfg.mode = EnumMode::kDivisorLattice;
    cfg.lattice_root = flags.lattice;
    cfg.max_element = flags.lattice;
  } else {
    cfg.max_element = flags.max_element;
  }
  if (flags.max_size > 0) cfg.max_size = flags.max_size;

  FindingWriter writer(out_path);
  const std::vector<Finding> findings = search_frontier(cfg, powers, threads, writer.sink());

  std::size_t critical = 0, warn = 0, info = 0;
  json listed = json::array();
  for (const Finding& f : findings) {
    if (f.severity == Severity::kCritical) ++critical;
    if (f.severity == Severity::kWarn) ++warn;
    if (f.severity == Severity::kInfo) ++info;
    if (out_path.empty()) listed.push_back(json_of(f));
  }
  json doc{{"findings_total", findings.size()},
           {"critical", critical},
           {"warn", warn},
           {"info", info}};
  if (out_path.empty()) doc["findings"] = std::move(listed);

  std::ostringstream text;
  text << "findings: " << findings.size() << " (critical " << critical << ", warn " << warn
       << ", info " << info << ")\n";
  emit(g, doc, text.str());
  return critical > 0 ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact power gcd/lcm matrix toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: json or text")->default_val("json");
  app.add_flag("-v,--verbose", g.verbosity, "Increase verbosity");
  app.add_option("--max-power-cap", g.max_power_cap, "Upper bound accepted for exponents")
      ->default_val(16);

  std::string set_literal, kind = "gcd", method = "auto", powers_spec, kinds_spec = "all";
  std::string out_path;
  unsigned a = 1, b = 1;
  bool include_quotient = false, strict_all = false;
  int threads = 1;
  EnumFlags flags;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Structural profile of a set");
  analyze_cmd->add_option("--set", set_literal, "Set literal, e.g. \"1,2,3,6\"")->required();

  CLI::App* matrix_cmd = app.add_subcommand("matrix", "Print a power gcd/lcm matrix");
  matrix_cmd->add_option("--set", set_literal)->required();
  matrix_cmd->add_option("--kind", kind, "gcd or lcm")->default_val("gcd");
  matrix_cmd->add_option("--a", a, "Power")->default_val(1);

  CLI::App* det_cmd = app.add_subcommand("det", "Exact determinant");
  det_cmd->add_option("--set", set_literal)->required();
  det_cmd->add_option("--kind", kind)->default_val("gcd");
  det_cmd->add_option("--a", a)->default_val(1);
  det_cmd->add_option("--method", method, "auto, oracle, structured or both")->default_val("auto");

  CLI::App* inv_cmd = app.add_subcommand("inverse", "Exact inverse");
  inv_cmd->add_option("--set", set_literal)->required();
  inv_cmd->add_option("--kind", kind)->default_val("gcd");
  inv_cmd->add_option("--a", a)->default_val(1);
  inv_cmd->add_option("--method", method)->default_val("auto");

  CLI::App* div_cmd = app.add_subcommand("divides", "Matrix divisibility verdict");
  div_cmd->add_option("--set", set_literal)->required();
  div_cmd->add_option("--a", a)->required();
  div_cmd->add_option("--b", b)->required();
  div_cmd->add_option("--kind", kind, "gcd-gcd, gcd-lcm or lcm-lcm")->required();
  div_cmd->add_flag("--quotient", include_quotient, "Include the quotient matrix");

  CLI::App* val_cmd = app.add_subcommand("validate", "Run a validation campaign");
  val_cmd->add_option("--max-element", flags.max_element, "Enumerate subsets of {1..B}");
  val_cmd->add_option("--max-size", flags.max_size);
  val_cmd->add_option("--lattice", flags.lattice, "Enumerate subsets of divisors(M)");
  val_cmd->add_option("--set-file", flags.set_file, "Read sets from a file instead");
  val_cmd->add_option("--powers", powers_spec, "Comma list of a:b pairs")->required();
  val_cmd->add_option("--kinds", kinds_spec, "all or comma list of pair kinds")
      ->default_val("all");
  val_cmd->add_option("--out", out_path, "Findings file (one JSON object per line)");
  val_cmd->add_flag("--strict-all", strict_all, "Fail on informational findings too");
  val_cmd->add_option("--threads", threads)->default_val(1);

  CLI::App* search_cmd = app.add_subcommand("search", "Probe beyond the proven range");
  search_cmd->add_option("--max-element", flags.max_element);
  search_cmd->add_option("--max-size", flags.max_size);
  search_cmd->add_option("--lattice", flags.lattice);
  search_cmd->add_option("--powers", powers_spec)->required();
  search_cmd->add_option("--out", out_path);
  search_cmd->add_option("--threads", threads)->default_val(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(g, set_literal);
    if (matrix_cmd->parsed()) return cmd_matrix(g, set_literal, kind, a);
    if (det_cmd->parsed()) return cmd_det(g, set_literal, kind, a, method);
    if (inv_cmd->parsed()) return cmd_inverse(g, set_literal, kind, a, method);
    if (div_cmd->parsed()) return cmd_divides(g, set_literal, a, b, kind, include_quotient);
    if (val_cmd->parsed())
      return cmd_validate(g, flags, powers_spec, kinds_spec, out_path, strict_all, threads);
    if (search_cmd->parsed()) return cmd_search(g, flags, powers_spec, out_path, threads);
  } catch (const SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecidable;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
