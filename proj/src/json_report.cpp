#include "wcert/json_report.hpp"

namespace wcert {

using nlohmann::json;

json to_json(const Interval& v) { return json::array({v.lo, v.hi}); }

json to_json(const DomainSpec& d) {
  json j;
  j["kind"] = d.name();
  if (d.kind == DomainSpec::Kind::UnitInterval)
    j["delta"] = d.left_cut;
  else
    j["cap"] = d.right_cap;
  j["box"] = to_json(d.truncated());
  return j;
}

json to_json(const Witness& w) {
  return json{{"x", w.x}, {"y", w.y}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"margin", w.margin}};
}

json to_json(const Certificate& c) {
  json j;
  j["criterion"] = c.criterion;
  j["box_x"] = to_json(c.box_x);
  if (c.box_y) j["box_y"] = to_json(*c.box_y);
  j["max_depth_used"] = c.max_depth_used;
  j["leaves"] = c.leaves;
  j["strict"] = c.strict;
  j["tolerance"] = c.tolerance;
  return j;
}

json to_json(const PropertyVerdict& v) {
  json j;
  j["property"] = property_name(v.property);
  j["outcome"] = outcome_name(v.outcome);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.undecided_x) j["undecided_x"] = to_json(*v.undecided_x);
  if (v.undecided_y) j["undecided_y"] = to_json(*v.undecided_y);
  return j;
}

json to_json(const ClassifyResult& r) {
  json j;
  j["expression"] = r.expression;
  j["domain"] = to_json(r.domain);
  j["normalization"] = json{{"f1", r.normalization.f1},
                            {"positive_on_box", r.normalization.positive_on_box},
                            {"ok", r.normalization.ok()}};
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = verdicts;
  return j;
}

json to_json(const IneqReport& r) {
  return json{{"name", r.name},   {"inputs", r.inputs}, {"lhs", r.lhs},
              {"rhs", r.rhs},     {"slack", r.slack},   {"holds", r.holds},
              {"notes", r.notes}};
}

json to_json(const FuzzSummary& s) {
  return json{{"name", s.name},
              {"trials", s.trials},
              {"violations", s.violations},
              {"min_slack", s.min_slack},
              {"worst_inputs", s.worst_inputs},
              {"seed", s.seed}};
}

json to_json(const Constants& c) {
  return json{{"euler_gamma", c.euler_gamma},
              {"x_min", c.x_min},
              {"x1", c.x1},
              {"xi", c.xi},
              {"digamma_at_x_min", c.digamma_at_x_min},
              {"xi_series_residual", c.xi_series_residual},
              {"xi_series_terms", c.xi_series_terms},
              {"xi_tolerance", c.xi_tolerance}};
}

json to_json(const CaseOutcome& c) {
  json j;
  j["label"] = c.spec.label;
  j["expression"] = c.spec.expression_text;
  j["match"] = c.match;
  if (!c.mismatches.empty()) j["mismatches"] = c.mismatches;
  j["result"] = to_json(c.result);
  return j;
}

json to_json(const EntryOutcome& e) {
  json j;
  j["id"] = e.id;
  j["provenance"] = e.provenance;
  j["match"] = e.match;
  json cases = json::array();
  for (const auto& c : e.cases) cases.push_back(to_json(c));
  j["cases"] = cases;
  return j;
}

json catalog_to_json(const std::vector<EntryOutcome>& outcomes) {
  json entries = json::array();
  for (const auto& e : outcomes) entries.push_back(to_json(e));
  return json{{"entries", entries}, {"mismatches", count_mismatches(outcomes)}};
}

json config_to_json(const ClassifyConfig& cfg, const DomainSpec& d) {
  json j;
  j["domain"] = to_json(d);
  j["max_depth"] = cfg.max_depth;
  j["max_boxes"] = cfg.max_boxes;
  j["time_budget_s"] = cfg.time_budget_s;
  j["cert_tolerance"] = cfg.cert_tolerance;
  j["report_tolerance"] = cfg.report_tolerance;
  j["grid_n"] = cfg.grid_n;
  return j;
}

ClassifyConfig config_from_json(const json& j) {
  ClassifyConfig cfg;
  if (j.contains("max_depth")) cfg.max_depth = j.at("max_depth").get<int>();
  if (j.contains("max_boxes")) cfg.max_boxes = j.at("max_boxes").get<long>();
  if (j.contains("time_budget_s")) cfg.time_budget_s = j.at("time_budget_s").get<double>();
  if (j.contains("cert_tolerance")) cfg.cert_tolerance = j.at("cert_tolerance").get<double>();
  if (j.contains("report_tolerance"))
    cfg.report_tolerance = j.at("report_tolerance").get<double>();
  if (j.contains("grid_n")) cfg.grid_n = j.at("grid_n").get<int>();
  if (cfg.max_depth < 1 || cfg.max_boxes < 1 || cfg.grid_n < 2 || cfg.cert_tolerance < 0.0 ||
      cfg.report_tolerance < 0.0 || cfg.time_budget_s <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "invalid classification configuration");
  return cfg;
}

DomainSpec domain_from_json(const json& j) {
  std::string kind = j.value("domain_kind", "unit");
  if (kind == "unit") return DomainSpec::unit(j.value("delta", 1e-6));
  if (kind == "ray") return DomainSpec::ray(j.value("cap", 10.0));
  throw Error(ErrorCode::InvalidArgument, "domain_kind must be 'unit' or 'ray'");
}

}  // namespace wcert
