#pragma once

// Machine-readable reports: suite runs, search reports and the catalog dump.
// Keys are emitted in a fixed order so equal runs give byte-identical files.

#include <sstream>

#include "logmaj/matrix_io.hpp"
#include "logmaj/search.hpp"

namespace logmaj {

inline Json params_to_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p.items()) j[k] = real_to_json(v);
  return j;
}

inline Params params_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadFormat, "params must be an object");
  Params p;
  for (const auto& [k, v] : j.items()) p.set(k, real_from_json(v));
  return p;
}

inline Json instance_to_json(const Instance& inst) {
  Json inputs = Json::array();
  for (const auto& m : inst.inputs) {
    Json jm = matrix_to_json(m);
    jm["digest"] = matrix_digest(m);
    inputs.push_back(std::move(jm));
  }
  return {{"inputs", std::move(inputs)}, {"params", params_to_json(inst.params)}};
}

inline Instance instance_from_json(const Json& j) {
  Instance inst;
  for (const auto& m : j.at("inputs")) inst.inputs.push_back(matrix_from_json(m));
  inst.params = params_from_json(j.at("params"));
  return inst;
}

inline Json leg_to_json(const LegResult& r) {
  return {{"name", r.name},
          {"relation", std::string(to_string(r.relation))},
          {"gating", r.gating},
          {"holds", r.holds},
          {"margin", real_to_json(r.margin)},
          {"objective", real_to_json(r.objective)},
          {"det_gap", real_to_json(r.det_gap)},
          {"k_margins", reals_to_json(r.k_margins)},
          {"lhs", reals_to_json(r.lhs)},
          {"rhs", reals_to_json(r.rhs)}};
}

inline Json outcome_to_json(const Outcome& o, bool timing) {
  Json legs = Json::array();
  for (const auto& l : o.legs) legs.push_back(leg_to_json(l));
  Json j = {{"id", o.id}, {"dim", o.dim}, {"trial", o.trial}};
  const Json inst = instance_to_json(o.instance);
  j["inputs"] = inst["inputs"];
  j["params"] = inst["params"];
  j["legs"] = std::move(legs);
  j["holds"] = o.holds;
  j["min_margin"] = real_to_json(o.min_margin);
  j["objective"] = real_to_json(o.objective);
  j["violation"] = o.violation;
  j["skipped"] = o.skipped;
  j["skip_reason"] = o.skip_reason;
  j["limit"] = o.limit;
  if (timing) j["wall_time"] = o.wall_time;
  return j;
}

inline Json summary_to_json(const EntrySummary& s) {
  return {{"id", s.id},
          {"status", std::string(to_string(s.status))},
          {"trials", s.trials},
          {"failures", s.failures},
          {"skipped", s.skipped},
          {"violations", s.violations},
          {"worst_margin", real_to_json(s.worst_margin)},
          {"verdict", s.verdict},
          {"expected", s.expected}};
}

inline Json tolerances_to_json(const Tolerances& t) {
  return {{"tol", t.tol},
          {"tol_det", t.tol_det},
          {"strictness", t.strictness},
          {"epsilon", t.epsilon},
          {"cond_target", t.cond_target},
          {"cond_budget", t.cond_budget}};
}

inline Tolerances tolerances_from_json(const Json& j) {
  Tolerances t;
  t.tol = j.at("tol").get<double>();
  t.tol_det = j.at("tol_det").get<double>();
  t.strictness = j.at("strictness").get<double>();
  t.epsilon = j.at("epsilon").get<double>();
  t.cond_target = j.at("cond_target").get<double>();
  t.cond_budget = j.at("cond_budget").get<double>();
  return t;
}

inline Json suite_config_to_json(const std::string& command, const SuiteConfig& cfg) {
  return {{"command", command},
          {"ids", cfg.ids},
          {"dims", cfg.dims},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"tolerances", tolerances_to_json(cfg.tol)}};
}

inline Json suite_report(const std::string& command, const SuiteConfig& cfg, const std::vector<Outcome>& outcomes,
                         const std::vector<EntrySummary>& summary, bool timing) {
  Json outs = Json::array();
  for (const auto& o : outcomes) outs.push_back(outcome_to_json(o, timing));
  Json sums = Json::array();
  for (const auto& s : summary) sums.push_back(summary_to_json(s));
  return {{"config", suite_config_to_json(command, cfg)},
          {"catalog_version", std::string(kCatalogVersion)},
          {"outcomes", std::move(outs)},
          {"summary", std::move(sums)}};
}

/// One row per id: id, trials, failures, worst_margin, status (the verdict).
inline std::string summary_csv(const std::vector<EntrySummary>& summary) {
  std::ostringstream out;
  out << "id,trials,failures,worst_margin,status\n";
  for (const auto& s : summary) {
    const Json w = real_to_json(s.worst_margin);
    out << s.id << ',' << s.trials << ',' << s.failures << ',' << (w.is_string() ? w.get<std::string>() : w.dump())
        << ',' << s.verdict << '\n';
  }
  return out.str();
}

inline Json search_report_to_json(const SearchReport& rep, const SearchConfig& cfg) {
  Json trace = Json::array();
  for (const auto& p : rep.margin_trace) trace.push_back({p.restart, real_to_json(p.best_margin)});
  Json config = {{"id", cfg.id},
                 {"budget", cfg.budget},
                 {"dims", cfg.dims},
                 {"seed", cfg.seed},
                 {"hill_steps", cfg.hill_steps},
                 {"initial_magnitude", cfg.initial_magnitude},
                 {"anneal", cfg.anneal},
                 {"tolerances", tolerances_to_json(cfg.tol)}};
  return {{"config", std::move(config)},
          {"catalog_version", std::string(kCatalogVersion)},
          {"target_id", rep.target_id},
          {"trials_used", rep.trials_used},
          {"best_restart", rep.best_restart},
          {"best_dim", rep.best_dim},
          {"best_margin", real_to_json(rep.best_margin)},
          {"violation_found", rep.violation_found},
          {"best_instance", instance_to_json(rep.best_instance)},
          {"margin_trace", std::move(trace)}};
}

struct StoredSearch {
  SearchConfig config;
  SearchReport report;
};

inline StoredSearch search_report_from_json(const Json& j) {
  StoredSearch s;
  const Json& c = j.at("config");
  s.config.id = c.at("id").get<std::string>();
  s.config.budget = c.at("budget").get<long>();
  s.config.dims = c.at("dims").get<std::vector<Index>>();
  s.config.seed = c.at("seed").get<std::uint64_t>();
  s.config.hill_steps = c.at("hill_steps").get<int>();
  s.config.initial_magnitude = c.at("initial_magnitude").get<double>();
  s.config.anneal = c.at("anneal").get<double>();
  s.config.tol = tolerances_from_json(c.at("tolerances"));
  SearchReport& r = s.report;
  r.target_id = j.at("target_id").get<std::string>();
  r.trials_used = j.at("trials_used").get<long>();
  r.best_restart = j.at("best_restart").get<long>();
  r.best_dim = j.at("best_dim").get<Index>();
  r.best_margin = real_from_json(j.at("best_margin"));
  r.violation_found = j.at("violation_found").get<bool>();
  r.best_instance = instance_from_json(j.at("best_instance"));
  for (const auto& p : j.at("margin_trace")) r.margin_trace.push_back({p.at(0).get<long>(), real_from_json(p.at(1))});
  return s;
}

inline Json catalog_to_json() {
  Json entries = Json::array();
  for (const Entry& e : catalog()) {
    Json inputs = Json::array();
    for (const auto& in : e.inputs)
      inputs.push_back({{"name", in.name}, {"class", std::string(to_string(in.cls))}, {"dim_factor", in.dim_factor}});
    Json coords = Json::array();
    for (const auto& c : e.coords) coords.push_back({{"name", c.name}, {"lo", c.lo}, {"hi", c.hi}});
    Json legs = Json::array();
    for (const auto& l : e.legs) {
      Json jl = {{"name", l.name},
                 {"relation", std::string(to_string(l.relation))},
                 {"lhs", l.lhs},
                 {"rhs", l.rhs},
                 {"gating", l.gating}};
      if (!l.ps.empty()) jl["ps"] = reals_to_json(l.ps);
      legs.push_back(std::move(jl));
    }
    Json je = {{"id", e.id},
               {"status", std::string(to_string(e.status))},
               {"statement", e.statement},
               {"anchor", e.anchor},
               {"inputs", std::move(inputs)},
               {"coords", std::move(coords)},
               {"domain", e.domain},
               {"legs", std::move(legs)},
               {"psd_stated", e.psd_stated}};
    if (!e.refuted_by.empty()) je["refuted_by"] = e.refuted_by;
    entries.push_back(std::move(je));
  }
  return {{"catalog_version", std::string(kCatalogVersion)}, {"entries", std::move(entries)}};
}

}  // namespace logmaj
