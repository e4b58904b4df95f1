// logmaj: run the inequality suite, search for counterexamples, reproduce
// the known refutations, dump the catalog.
//
// Exit codes: 0 every outcome as expected, 1 an asserted entry failed or a
// conjecture was violated (or a refutation was not found), 2 usage or
// numerical error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "logmaj/logmaj.hpp"

using namespace logmaj;

namespace {

constexpr int kExpected = 0;
constexpr int kUnexpected = 1;
constexpr int kError = 2;

struct Options {
  std::string ids = "all-theorems";
  std::vector<Index> dims;
  long trials = 200;
  std::uint64_t seed = 7;
  Tolerances tol;
  std::string out;
  std::string format = "json";
  std::string replay;
  long budget = 1000;
  int hill_steps = 20;
  bool timing = false;
  bool large_dims = false;
  std::string fixture;
  std::string target;
};

void validate(const Options& o) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v)) throw CLI::ValidationError(name, "must be a positive number");
  };
  positive(o.tol.tol, "--tol");
  positive(o.tol.tol_det, "--tol-det");
  positive(o.tol.strictness, "--strictness");
  if (!(o.tol.cond_target >= 1)) throw CLI::ValidationError("--cond-target", "must be at least 1");
  const Index max_dim = o.large_dims ? 64 : 8;
  for (Index n : o.dims)
    if (n < 2 || n > max_dim)
      throw CLI::ValidationError("--dims", "dimensions must lie in [2, " + std::to_string(max_dim) + "]");
  if (o.trials < 1) throw CLI::ValidationError("--trials", "must be at least 1");
  if (o.budget < 1) throw CLI::ValidationError("--budget", "must be at least 1");
  if (o.hill_steps < 0) throw CLI::ValidationError("--hill-steps", "must be nonnegative");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::BadFormat, "cannot write " + o.out);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::BadFormat, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadFormat, path + ": " + e.what());
  }
}

std::string fmt_real(double v) {
  const Json j = real_to_json(v);
  if (j.is_string()) return j.get<std::string>();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void print_summary(const std::vector<EntrySummary>& summary, std::ostream& os) {
  for (const auto& s : summary) {
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %-18s trials=%-5ld failures=%-4ld skipped=%-3ld worst=%-13s %s%s\n",
                  s.id.c_str(), std::string(to_string(s.status)).c_str(), s.trials, s.failures, s.skipped,
                  fmt_real(s.worst_margin).c_str(), s.verdict.c_str(), s.expected ? "" : "  (unexpected)");
    os << line;
  }
}

int summary_code(const std::vector<EntrySummary>& summary) {
  for (const auto& s : summary)
    if (!s.expected) return kUnexpected;
  return kExpected;
}

int write_suite(const Options& o, const SuiteConfig& cfg, const std::vector<Outcome>& outcomes) {
  const auto summary = summarize(cfg.ids, outcomes);
  if (o.format == "csv-summary") {
    emit(o, summary_csv(summary));
    if (!o.out.empty()) print_summary(summary, std::cout);
  } else if (o.out.empty()) {
    print_summary(summary, std::cout);
  } else {
    emit(o, suite_report("verify", cfg, outcomes, summary, o.timing).dump() + "\n");
    print_summary(summary, std::cout);
  }
  return summary_code(summary);
}

int run_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.ids = expand_ids(o.ids);
  cfg.dims = o.dims.empty() ? std::vector<Index>{2, 3, 4, 5} : o.dims;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  return write_suite(o, cfg, run_suite(cfg));
}

/// Re-evaluates every outcome of a stored report; any difference from the
/// stored outcome is a reproduction failure.
int run_replay(const Options& o) {
  const Json stored = read_json(o.replay);
  const Json& c = stored.at("config");
  SuiteConfig cfg;
  cfg.ids = c.at("ids").get<std::vector<std::string>>();
  cfg.dims = c.at("dims").get<std::vector<Index>>();
  cfg.trials = c.at("trials").get<long>();
  cfg.seed = c.at("seed").get<std::uint64_t>();
  cfg.tol = tolerances_from_json(c.at("tolerances"));
  const Json& outs = stored.at("outcomes");
  std::vector<Outcome> outcomes(outs.size());
  parallel_for(outs.size(), [&](std::size_t i) {
    Outcome r = evaluate(outs[i].at("id").get<std::string>(), instance_from_json(outs[i]), cfg.tol);
    r.trial = outs[i].at("trial").get<long>();
    outcomes[i] = std::move(r);
  });
  long mismatches = 0;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    Json want = outs[i];
    want.erase("wall_time");
    if (outcome_to_json(outcomes[i], false) != want) {
      if (mismatches++ < 5)
        std::cerr << "mismatch: " << outcomes[i].id << " dim " << outcomes[i].dim << " trial " << outcomes[i].trial
                  << "\n";
    }
  }
  const int code = write_suite(o, cfg, outcomes);
  std::cout << "replayed " << outs.size() << " outcomes, " << mismatches << " mismatched\n";
  if (mismatches > 0) throw Error(ErrorCode::ReproductionMismatch, std::to_string(mismatches) + " outcomes differ");
  return code;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.id = o.target;
  cfg.budget = o.budget;
  cfg.dims = o.dims.empty() ? std::vector<Index>{2, 3} : o.dims;
  cfg.seed = o.seed;
  cfg.hill_steps = o.hill_steps;
  cfg.tol = o.tol;
  return cfg;
}

/// A search is as expected when it finds a violation exactly for entries the
/// source text refutes.
bool search_expected(const SearchReport& rep) {
  const Entry& e = lookup(rep.target_id);
  const bool refuted = e.status == Status::example_refutation || !e.refuted_by.empty();
  return rep.violation_found == refuted;
}

void print_search(const SearchReport& rep, std::ostream& os) {
  os << rep.target_id << ": " << rep.trials_used << " evaluations, best margin " << fmt_real(rep.best_margin)
     << " at restart " << rep.best_restart << " (n = " << rep.best_dim << "), "
     << (rep.violation_found ? "violation found" : "no violation") << "\n";
}

void print_instance(const Outcome& out, std::ostream& os) {
  for (const auto& [k, v] : out.instance.params.items()) os << "  " << k << " = " << fmt_real(v) << "\n";
  const Entry& e = lookup(out.id);
  for (std::size_t i = 0; i < out.instance.inputs.size(); ++i)
    os << "  " << e.inputs[i].name << " = " << matrix_to_json(out.instance.inputs[i]).at("entries").dump() << "\n";
  for (const auto& l : out.legs) {
    os << "  leg " << l.name << " (" << to_string(l.relation) << (l.gating ? "" : ", not gating")
       << "): margin " << fmt_real(l.margin);
    if (!l.k_margins.empty()) {
      os << ", per-k margins";
      for (double m : l.k_margins) os << " " << fmt_real(m);
    }
    if (is_majorization(l.relation)) os << ", det gap " << fmt_real(l.det_gap);
    os << "\n";
  }
}

int run_search(const Options& o) {
  const SearchConfig cfg = search_config(o);
  const SearchReport rep = search(cfg);
  verify_instance(rep, cfg.tol);
  if (!o.out.empty()) emit(o, search_report_to_json(rep, cfg).dump(2) + "\n");
  print_search(rep, std::cout);
  const bool expected = search_expected(rep);
  if (!expected) std::cout << "unexpected: " << (rep.violation_found ? "a violation of an open claim" : "no violation of a refuted claim") << "\n";
  return expected ? kExpected : kUnexpected;
}

int run_reproduce(const Options& o) {
  const Entry& e = lookup(o.target);
  SearchReport rep;
  if (!o.fixture.empty()) {
    rep = search_report_from_json(read_json(o.fixture)).report;
    if (rep.target_id != e.id) throw Error(ErrorCode::BadFormat, "fixture is for " + rep.target_id);
    std::cout << "fixture " << o.fixture << "\n";
  } else {
    const SearchConfig cfg = search_config(o);
    rep = search(cfg);
    if (!o.out.empty()) emit(o, search_report_to_json(rep, cfg).dump(2) + "\n");
  }
  const Outcome out = verify_instance(rep, o.tol);
  print_search(rep, std::cout);
  print_instance(out, std::cout);
  return search_expected(rep) ? kExpected : kUnexpected;
}

int run_dump(const Options& o) {
  emit(o, catalog_to_json().dump(2) + "\n");
  return kExpected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log-majorization inequality checker and counterexample search"};
  app.require_subcommand(1);
  Options o;

  auto add_tolerances = [&o](CLI::App* c) {
    c->add_option("--tol", o.tol.tol, "absolute tolerance on log-margins")->capture_default_str();
    c->add_option("--tol-det", o.tol.tol_det, "relative tolerance on determinant equality")->capture_default_str();
    c->add_option("--strictness", o.tol.strictness, "a violation needs margin below -strictness")
        ->capture_default_str();
    c->add_option("--cond-target", o.tol.cond_target, "condition number of sampled inputs")->capture_default_str();
  };
  auto add_dims = [&o](CLI::App* c) {
    c->add_option("--dims", o.dims, "matrix dimensions")->delimiter(',');
    c->add_flag("--allow-large-dims", o.large_dims, "allow dimensions up to 64");
    c->add_option("--seed", o.seed, "random seed")->capture_default_str();
  };
  auto add_search = [&o](CLI::App* c) {
    c->add_option("--budget", o.budget, "random restarts")->capture_default_str();
    c->add_option("--hill-steps", o.hill_steps, "perturbation steps per restart")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--ids", o.ids, "ids, or all-theorems, all-refutations, all-conjectures, all")
      ->capture_default_str();
  verify->add_option("--trials", o.trials, "trials per id and dimension")->capture_default_str();
  verify->add_option("--out", o.out, "report file");
  verify->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "csv-summary"}))
      ->capture_default_str();
  verify->add_option("--replay", o.replay, "re-evaluate the outcomes of a stored report")->check(CLI::ExistingFile);
  verify->add_flag("--timing", o.timing, "include wall times in the report");
  add_dims(verify);
  add_tolerances(verify);

  auto* search_cmd = app.add_subcommand("search", "hunt for a counterexample");
  search_cmd->add_option("id", o.target, "conjecture or refutation id")->required();
  search_cmd->add_option("--out", o.out, "search report file");
  add_dims(search_cmd);
  add_search(search_cmd);
  add_tolerances(search_cmd);

  auto* reproduce = app.add_subcommand("reproduce", "find and print a refuting instance");
  reproduce->add_option("id", o.target, "refutation id")->required();
  reproduce->add_option("--fixture", o.fixture, "verify a stored search report instead of searching")
      ->check(CLI::ExistingFile);
  reproduce->add_option("--out", o.out, "search report file");
  add_dims(reproduce);
  add_search(reproduce);
  add_tolerances(reproduce);

  auto* registry = app.add_subcommand("registry", "catalog tools");
  registry->require_subcommand(1);
  auto* dump = registry->add_subcommand("dump", "write the catalog as JSON");
  dump->add_option("--out", o.out, "output file");
  auto* dump_alias = app.add_subcommand("registry-dump", "write the catalog as JSON");
  dump_alias->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
    validate(o);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExpected : kError;
  }

  try {
    if (verify->parsed()) return o.replay.empty() ? run_verify(o) : run_replay(o);
    if (search_cmd->parsed()) return run_search(o);
    if (reproduce->parsed()) return run_reproduce(o);
    return run_dump(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const Json::exception& e) {
    std::cerr << "error: BadFormat: " << e.what() << "\n";
    return kError;
  }
}
