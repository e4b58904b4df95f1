#pragma once

// Counterexample hunting for conjecture and refutation entries: random
// restarts, each followed by a hill climb on the inputs and parameters that
// keeps only strictly smaller objectives.

#include <cmath>
#include <limits>

#include "logmaj/registry.hpp"

namespace logmaj {

struct SearchConfig {
  std::string id;
  long budget = 1000;  // restarts
  std::vector<Index> dims{2, 3};
  std::uint64_t seed = 0;
  int hill_steps = 20;
  Tolerances tol;
  double initial_magnitude = 0.3;  // relative to ||M||_F, and to box width for coordinates
  double anneal = 0.7;             // applied per non-improving step, reset on improvement
};

struct TracePoint {
  long restart = 0;
  double best_margin = 0;
};

struct SearchReport {
  std::string target_id;
  long trials_used = 0;  // objective evaluations
  long best_restart = -1;
  Index best_dim = 0;
  double best_margin = std::numeric_limits<double>::infinity();
  Instance best_instance;
  bool violation_found = false;
  std::vector<TracePoint> margin_trace;  // one point per improvement of the running best
};

namespace detail {

struct BoxPoint {
  std::vector<double> coords;
  Params params;
};

/// Every fourth restart works on the parameter boundary.
inline bool boundary_restart(long restart) { return restart % 4 == 3; }

inline std::optional<Params> map_point(const Entry& e, const std::vector<double>& x) {
  try {
    return e.map(x);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::EmptyDomain) throw;
    return std::nullopt;
  }
}

/// A random box corner whose image is nonempty, else a uniform point.
inline BoxPoint start_point(const Entry& e, Stream& rng, bool corner) {
  if (corner && !e.coords.empty()) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::vector<double> x(e.coords.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.below(2) ? e.coords[i].hi : e.coords[i].lo;
      if (auto p = map_point(e, x)) return {std::move(x), std::move(*p)};
    }
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto x = sample_coords(e, rng);
    if (auto p = map_point(e, x)) return {std::move(x), std::move(*p)};
  }
  throw Error(ErrorCode::EmptyDomain, e.id + ": could not sample a parameter point");
}

inline double objective_of(const Entry& e, const Instance& inst, const Tolerances& tol) {
  try {
    return evaluate(e, inst, tol).objective;
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

struct RestartResult {
  double best = std::numeric_limits<double>::infinity();
  Instance instance;
  Index dim = 0;
  long evaluations = 0;
};

inline RestartResult run_restart(const Entry& e, const SearchConfig& cfg, long restart) {
  Stream rng(cfg.seed, e.id + "/restart", static_cast<std::uint64_t>(restart));
  const Index n = cfg.dims[static_cast<std::size_t>(restart) % cfg.dims.size()];
  const bool frozen = boundary_restart(restart);

  BoxPoint point = start_point(e, rng, frozen);
  auto specs_for = [&](const Params& p) {
    const double cond = trial_cond(e, p, cfg.tol);
    std::vector<GenSpec> specs;
    for (const auto& in : e.inputs) specs.push_back(input_spec(in, n, cond));
    return specs;
  };
  Instance current{{}, point.params};
  for (const auto& g : specs_for(point.params)) current.inputs.push_back(random_matrix(g, rng));

  RestartResult r;
  r.dim = n;
  r.best = objective_of(e, current, cfg.tol);
  r.evaluations = 1;
  double scale = cfg.initial_magnitude;
  for (int step = 0; step < cfg.hill_steps; ++step) {
    BoxPoint next = point;
    if (!frozen && !e.coords.empty()) {
      for (std::size_t i = 0; i < next.coords.size(); ++i) {
        const Coord& c = e.coords[i];
        next.coords[i] = std::clamp(next.coords[i] + scale * (c.hi - c.lo) * rng.normal(), c.lo, c.hi);
      }
      if (auto p = map_point(e, next.coords)) next.params = std::move(*p);
      else next = point;
    }
    Instance candidate{{}, next.params};
    const auto specs = specs_for(next.params);
    for (std::size_t i = 0; i < current.inputs.size(); ++i) {
      const MatrixD& m = current.inputs[i];
      candidate.inputs.push_back(perturb(m, specs[i], scale * m.norm(), rng));
    }
    const double value = objective_of(e, candidate, cfg.tol);
    ++r.evaluations;
    if (value < r.best) {
      r.best = value;
      current = std::move(candidate);
      point = std::move(next);
      scale = cfg.initial_magnitude;
    } else {
      scale *= cfg.anneal;
    }
  }
  r.instance = std::move(current);
  return r;
}

}  // namespace detail

/// Runs cfg.budget restarts in parallel. The report depends only on cfg: each
/// restart owns its stream and ties go to the smaller restart index.
inline SearchReport search(const SearchConfig& cfg, unsigned threads = thread_count()) {
  const Entry& e = lookup(cfg.id);
  if (e.status != Status::conjecture && e.status != Status::example_refutation)
    throw Error(ErrorCode::WrongStatus, cfg.id + " is " + std::string(to_string(e.status)) + ", not searchable");
  if (cfg.budget < 1) throw Error(ErrorCode::BadSpec, "search budget must be at least 1");
  if (cfg.hill_steps < 0) throw Error(ErrorCode::BadSpec, "hill steps must be nonnegative");
  if (cfg.dims.empty()) throw Error(ErrorCode::BadSpec, "search needs at least one dimension");
  if (!(cfg.anneal > 0 && cfg.anneal < 1) || !(cfg.initial_magnitude > 0))
    throw Error(ErrorCode::BadSpec, "annealing schedule out of range");

  std::vector<detail::RestartResult> results(static_cast<std::size_t>(cfg.budget));
  parallel_for(
      results.size(), [&](std::size_t i) { results[i] = detail::run_restart(e, cfg, static_cast<long>(i)); }, threads);

  SearchReport rep;
  rep.target_id = cfg.id;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    rep.trials_used += r.evaluations;
    if (rep.best_restart < 0 || r.best < rep.best_margin) {
      rep.best_margin = r.best;
      rep.best_restart = static_cast<long>(i);
      rep.margin_trace.push_back({static_cast<long>(i), r.best});
    }
  }
  auto& best = results[static_cast<std::size_t>(rep.best_restart)];
  rep.best_dim = best.dim;
  rep.best_instance = std::move(best.instance);
  rep.violation_found = rep.best_margin < -cfg.tol.strictness;
  return rep;
}

/// Absolute agreement required when re-evaluating a reported instance.
constexpr double kReproductionTolerance = 1e-9;

/// Re-evaluates the best instance through the registry; it must reproduce
/// the reported margin.
inline Outcome verify_instance(const SearchReport& rep, const Tolerances& tol) {
  Outcome o = evaluate(rep.target_id, rep.best_instance, tol);
  const bool both_inf = std::isinf(o.objective) && std::isinf(rep.best_margin) &&
                        std::signbit(o.objective) == std::signbit(rep.best_margin);
  if (!both_inf && !(std::abs(o.objective - rep.best_margin) <= kReproductionTolerance))
    throw Error(ErrorCode::ReproductionMismatch, rep.target_id + ": instance re-evaluates to a different margin");
  return o;
}

}  // namespace logmaj
