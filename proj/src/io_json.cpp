#include "gcdmat/io_json.hpp"

#include <limits>

namespace gcdmat {

using nlohmann::json;

json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json json_of(const GcdSet& s) {
  json arr = json::array();
  for (const Int& x : s.elements()) arr.push_back(json_int(x));
  return arr;
}

json json_of(const ExactMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

static json json_of(const ConditionGWitness& w) {
  return {{"x", json_int(w.x)}, {"y1", json_int(w.y1)}, {"y2", json_int(w.y2)}, {"clause", w.clause}};
}

static json json_of(const EntryWitness& w) {
  return {{"row", w.row}, {"col", w.col}, {"value", w.value.str()}};
}

json json_of(const GcdSet& s, const StructureProfile& p) {
  json gtd = json::object();
  for (std::size_t k = 0; k < s.size(); ++k) {
    json list = json::array();
    for (const Int& d : p.gtd[k]) list.push_back(json_int(d));
    gtd[s[k].str()] = std::move(list);
  }
  json out = {{"set", json_of(s)},
              {"gcd_closed", p.gcd_closed},
              {"factor_closed", p.factor_closed},
              {"divisor_chain", p.divisor_chain},
              {"gtd", std::move(gtd)},
              {"max_gtd", p.max_gtd},
              {"condition_g", p.condition_g}};
  out["violation_witness"] = p.violation_witness ? json_of(*p.violation_witness) : json(nullptr);
  return out;
}

json json_of(const DivisibilityReport& r, bool include_quotient) {
  json out = {{"set", json_of(r.set)},
              {"a", r.a},
              {"b", r.b},
              {"pair_kind", to_string(r.kind)},
              {"status",
               r.status == ReportStatus::kDecided ? "decided" : "singular-divisor"},
              {"basis", kDecisionBasis}};
  if (r.status == ReportStatus::kDecided) {
    out["integral"] = r.integral;
    out["witness"] = r.witness ? json_of(*r.witness) : json(nullptr);
    if (include_quotient) out["quotient"] = json_of(r.quotient);
  } else {
    out["integral"] = nullptr;
    out["witness"] = nullptr;
  }
  return out;
}

json json_of(const Finding& f) {
  json out = {{"set", json_of(f.set)}, {"a", f.a},
              {"b", f.b},             {"pair_kind", f.kind},
              {"severity", to_string(f.severity)}};
  out["witness"] = f.witness ? json_of(*f.witness) : json(nullptr);
  if (!f.detail.empty()) out["detail"] = f.detail;
  return out;
}

json json_of(const CampaignSummary& summary) {
  json strata = json::array();
  for (const StratumCount& sc : summary.hypothesis_breakdown)
    strata.push_back({{"max_gtd", sc.max_gtd},
                      {"condition_g", sc.condition_g},
                      {"closure_class", sc.closure_class},
                      {"count", sc.count}});
  json violations = json::array();
  for (const Finding& f : summary.violations) violations.push_back(json_of(f));
  return {{"sets_examined", summary.sets_examined},
          {"hypothesis_breakdown", std::move(strata)},
          {"violations", std::move(violations)},
          {"info_findings", summary.info_findings},
          {"warn_findings", summary.warn_findings},
          {"runtime_ms", summary.elapsed_ms},
          {"threads", summary.threads}};
}

}  // namespace gcdmat
