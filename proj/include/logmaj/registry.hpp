#pragma once

// Catalog lookup, sampling, evaluation (with the epsilon-limit path for
// semi-definite inputs) and the parallel property suite.

#include <chrono>

#include "logmaj/catalog.hpp"
#include "logmaj/parallel.hpp"

namespace logmaj {

inline constexpr std::string_view kCatalogVersion = "1";

inline const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = build_catalog();
  return entries;
}

inline const Entry& lookup(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw Error(ErrorCode::UnknownId, "no registry entry " + std::string(id));
}

/// Comma-separated ids; the group names all-theorems, all-refutations,
/// all-conjectures and all are expanded in catalog order.
inline std::vector<std::string> expand_ids(std::string_view spec) {
  std::vector<std::string> out;
  auto add = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    std::string item(spec.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    if (item == "all-theorems") {
      for (const auto& e : catalog())
        if (is_asserted(e.status)) add(e.id);
    } else if (item == "all-refutations") {
      for (const auto& e : catalog())
        if (e.status == Status::example_refutation) add(e.id);
    } else if (item == "all-conjectures") {
      for (const auto& e : catalog())
        if (e.status == Status::conjecture && e.refuted_by.empty()) add(e.id);
    } else if (item == "all") {
      for (const auto& e : catalog()) add(e.id);
    } else {
      add(lookup(item).id);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampling

inline std::vector<double> sample_coords(const Entry& e, Stream& rng) {
  std::vector<double> x(e.coords.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(e.coords[i].lo, e.coords[i].hi);
  return x;
}

/// Uniform over the coordinate box, mapped onto the coupled domain; boxes
/// whose image is empty are redrawn.
inline Params sample_params(const Entry& e, Stream& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      return e.map(sample_coords(e, rng));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::EmptyDomain) throw;
    }
  }
  throw Error(ErrorCode::EmptyDomain, e.id + ": could not sample a parameter point");
}

/// Input conditioning for one trial: the target, reduced so that
/// cond^exponent_load stays within the budget.
inline double trial_cond(const Entry& e, const Params& p, const Tolerances& tol) {
  const double load = std::max(1.0, e.exponent_load(p));
  return std::max(1.0, std::min(tol.cond_target, std::pow(tol.cond_budget, 1.0 / load)));
}

inline GenSpec input_spec(const InputSpec& s, Index n, double cond) {
  GenSpec g;
  g.dim = n * s.dim_factor;
  g.kind = s.cls == InputClass::hermitian ? MatrixKind::hermitian : MatrixKind::pd;
  g.cond_target = cond;
  return g;
}

/// Trials with index = 99 mod 100 replace one semi-definite input by a
/// rank-deficient one (conditioned at most 1e3), cycling through the inputs.
inline bool rank_deficient_trial(const Entry& e, long trial) {
  if (!e.psd_stated || trial % 100 != 99) return false;
  return std::any_of(e.inputs.begin(), e.inputs.end(), [](const InputSpec& s) { return s.cls == InputClass::psd; });
}

/// Draws params, then inputs, from rng. `deficient` names the input made
/// rank-deficient, if any.
inline Instance draw_instance(const Entry& e, Index n, Stream& rng, const Tolerances& tol,
                              std::optional<std::size_t> deficient = std::nullopt) {
  Instance inst;
  inst.params = sample_params(e, rng);
  const double cond = trial_cond(e, inst.params, tol);
  for (std::size_t i = 0; i < e.inputs.size(); ++i) {
    GenSpec g = input_spec(e.inputs[i], n, cond);
    if (deficient == i && g.dim >= 2) {
      g.kind = MatrixKind::psd;
      g.rank = g.dim - 1;
      g.cond_target = std::min(cond, 1e3);
    }
    inst.inputs.push_back(random_matrix(g, rng));
  }
  return inst;
}

inline Instance random_instance(const Entry& e, Index n, long trial, std::uint64_t seed, const Tolerances& tol) {
  Stream rng(seed, e.id + "/n=" + std::to_string(n), static_cast<std::uint64_t>(trial));
  std::optional<std::size_t> deficient;
  if (rank_deficient_trial(e, trial)) {
    std::vector<std::size_t> psd_inputs;
    for (std::size_t i = 0; i < e.inputs.size(); ++i)
      if (e.inputs[i].cls == InputClass::psd) psd_inputs.push_back(i);
    deficient = psd_inputs[static_cast<std::size_t>(trial / 100) % psd_inputs.size()];
  }
  return draw_instance(e, n, rng, tol, deficient);
}

// ---------------------------------------------------------------------------
// Evaluation

/// Lab-precision input. Classification (definite, rank) is decided in
/// double, where the instance lives, and imposed on the lab decomposition.
inline LabInput to_lab_input(const InputSpec& spec, const MatrixD& m) {
  require_square_finite(m, "input");
  const auto hd = Hermitian<double>::checked(m, 64 * unit_roundoff<double>());
  const auto hl = Hermitian<LabReal>::from(cast_matrix<LabReal>(hd.matrix()));
  if (spec.cls == InputClass::hermitian) return {hl, std::nullopt};
  const auto pd = Psd<double>::from(hd);
  if (spec.cls == InputClass::pd && !pd.definite())
    throw Error(ErrorCode::DomainViolation, "input " + spec.name + " must be positive definite");
  auto dec = eig_hermitian(hl);
  std::vector<LabReal> values(dec.eigenvalues.vector());
  const std::size_t zeros = static_cast<std::size_t>(pd.dim() - pd.rank());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0 || i + zeros >= values.size()) values[i] = 0;
  auto p = Psd<LabReal>::from_spectral(std::move(dec.eigenvectors), std::move(values));
  return {p.hermitian(), p};
}

namespace detail {

inline double to_double(LabReal v) { return static_cast<double>(v); }

inline std::vector<double> to_doubles(const std::vector<LabReal>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

inline LabReal max_abs(const std::vector<LabReal>& v) {
  LabReal m = 0;
  for (LabReal x : v) m = std::max(m, std::abs(x));
  return m;
}

inline std::vector<LabReal> sorted_desc(std::vector<LabReal> v) {
  std::sort(v.begin(), v.end(), std::greater<LabReal>());
  return v;
}

inline Spectrum<LabReal> clamped_spectrum(const std::vector<LabReal>& v) {
  const LabReal top = max_abs(v);
  std::vector<LabReal> out(v);
  for (LabReal& x : out)
    if (x < zero_clamp<LabReal>(static_cast<Index>(v.size())) * top) x = 0;
  return Spectrum<LabReal>::from_unsorted(std::move(out));
}

}  // namespace detail

/// Applies a leg's relation to its raw values.
inline LegResult judge(const LegInfo& info, const LegValues& v, const Tolerances& tol) {
  using detail::max_abs;
  using detail::to_double;
  using detail::to_doubles;
  LegResult r;
  r.name = info.name;
  r.relation = info.relation;
  r.gating = info.gating;
  r.lhs = to_doubles(detail::sorted_desc(v.lhs));
  r.rhs = to_doubles(detail::sorted_desc(v.rhs));
  const LabReal ltol = tol.tol, ltol_det = tol.tol_det;
  const LabReal tiny = std::numeric_limits<LabReal>::min();

  switch (info.relation) {
    case Relation::weak_log:
    case Relation::log:
    case Relation::reverse_log: {
      const auto x = detail::clamped_spectrum(v.lhs), y = detail::clamped_spectrum(v.rhs);
      MajorizationVerdict<LabReal> m;
      if (info.relation == Relation::weak_log) m = weak_log_majorizes(x, y, ltol);
      else if (info.relation == Relation::log) m = log_majorizes(x, y, ltol, ltol_det);
      else m = reverse_log_majorizes(x, y, ltol, ltol_det);
      r.holds = m.holds;
      r.margin = to_double(m.min_margin);
      r.det_gap = to_double(m.det_gap);
      r.objective = to_double(objective(m, ltol_det));
      r.k_margins = to_doubles(m.k_margins);
      return r;
    }
    case Relation::loewner_leq: {
      const LabReal scale = std::max(max_abs(v.rhs), tiny);
      const LabReal low = *std::min_element(v.aux.begin(), v.aux.end());
      r.margin = to_double(low / scale);
      r.k_margins = to_doubles(detail::sorted_desc(v.aux));
      for (double& k : r.k_margins) k /= to_double(scale);
      break;
    }
    case Relation::eigenvalue_wise_leq:
    case Relation::singular_value_wise_leq: {
      const auto x = detail::sorted_desc(v.lhs), y = detail::sorted_desc(v.rhs);
      if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "index-wise comparison of different lengths");
      const LabReal scale = std::max({max_abs(x), max_abs(y), tiny});
      LabReal low = std::numeric_limits<LabReal>::infinity();
      for (std::size_t j = 0; j < x.size(); ++j) {
        const LabReal g = (y[j] - x[j]) / scale;
        r.k_margins.push_back(to_double(g));
        low = std::min(low, g);
      }
      r.margin = to_double(low);
      break;
    }
    case Relation::norm_leq: {
      const auto sx = Spectrum<LabReal>::from_unsorted(v.lhs), sy = Spectrum<LabReal>::from_unsorted(v.rhs);
      LabReal low = std::numeric_limits<LabReal>::infinity();
      for (double p : info.ps) {
        const LabReal nx = schatten_of(sx, LabReal(p)), ny = schatten_of(sy, LabReal(p));
        const LabReal g = (ny - nx) / std::max(ny, tiny);
        r.k_margins.push_back(to_double(g));
        low = std::min(low, g);
      }
      r.margin = to_double(low);
      break;
    }
    case Relation::fan_dominance: {
      const auto sx = Spectrum<LabReal>::from_unsorted(v.lhs), sy = Spectrum<LabReal>::from_unsorted(v.rhs);
      const auto f = fan_dominates_of(sx, sy, LabReal(0));
      LabReal low = std::numeric_limits<LabReal>::infinity(), cy = 0;
      for (std::size_t k = 0; k < f.gaps.size(); ++k) {
        cy += sy[k];
        const LabReal g = f.gaps[k] / std::max(cy, tiny);
        r.k_margins.push_back(to_double(g));
        low = std::min(low, g);
      }
      r.margin = to_double(low);
      break;
    }
    case Relation::spectrum_union_equality:
    case Relation::spectrum_equality: {
      const auto x = detail::sorted_desc(v.lhs), y = detail::sorted_desc(v.rhs);
      if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "spectra of different lengths");
      const LabReal scale = std::max({max_abs(x), max_abs(y), tiny});
      LabReal worst = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        const LabReal d = std::abs(x[j] - y[j]) / scale;
        r.k_margins.push_back(to_double(-d));
        worst = std::max(worst, d);
      }
      r.margin = to_double(-worst);
      break;
    }
    case Relation::det_equality: {
      const LabReal dl = std::abs(v.lhs.at(0)), dr = std::abs(v.rhs.at(0));
      const LabReal scale = std::max(dl, dr);
      const LabReal gap = scale == 0 ? LabReal(0) : std::abs(dl - dr) / scale;
      r.det_gap = to_double(gap);
      r.margin = -r.det_gap;
      r.objective = r.margin;
      r.holds = gap <= ltol_det;
      return r;
    }
  }
  r.objective = r.margin;
  r.holds = r.margin >= -tol.tol;
  return r;
}

namespace detail {

inline bool rungs_agree(const std::vector<LegValues>& a, const std::vector<LegValues>& b) {
  auto close = [](const std::vector<LabReal>& x, const std::vector<LabReal>& y) {
    if (x.size() != y.size()) return false;
    const LabReal scale = std::max(max_abs(x), max_abs(y));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::abs(x[i] - y[i]) > ladder_agreement<LabReal>() * scale) return false;
    return true;
  };
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!close(a[i].lhs, b[i].lhs) || !close(a[i].rhs, b[i].rhs) || !close(a[i].aux, b[i].aux)) return false;
  return true;
}

inline void zero_small(std::vector<LabReal>& v) {
  const LabReal cut = ladder_agreement<LabReal>() * max_abs(v);
  for (LabReal& x : v)
    if (std::abs(x) <= cut) x = 0;
}

/// Limit of the legs as every semi-definite input is shifted by e*I, e down
/// the ladder epsilon * {1, 1e-2, 1e-4} * max lambda_max.
inline std::vector<LegValues> limit_values(const Entry& e, const std::vector<LabInput>& lab, const Params& p,
                                           const Tolerances& tol) {
  LabReal top = 0;
  for (const auto& in : lab)
    if (in.p) top = std::max(top, in.p->eigenvalues().max());
  std::optional<std::vector<LegValues>> previous;
  for (LabReal rung : ladder_rungs<LabReal>()) {
    const LabReal eps = LabReal(tol.epsilon) * rung * top;
    std::vector<LabInput> shifted;
    for (const auto& in : lab) {
      if (!in.p) {
        shifted.push_back(in);
        continue;
      }
      auto q = in.p->shifted(eps);
      shifted.push_back({q.hermitian(), q});
    }
    auto current = e.evaluate(shifted, p);
    if (previous && rungs_agree(*previous, current)) {
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (!is_majorization(e.legs[i].relation)) continue;
        zero_small(current[i].lhs);
        zero_small(current[i].rhs);
      }
      return current;
    }
    previous = std::move(current);
  }
  throw Error(ErrorCode::NonConvergedLimit, "legs did not settle along the regularization ladder");
}

}  // namespace detail

/// Evaluates one instance. Domain and class violations throw; a limit that
/// does not settle yields a skipped outcome.
inline Outcome evaluate(const Entry& e, const Instance& inst, const Tolerances& tol) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  o.id = e.id;
  o.instance = inst;
  if (inst.inputs.size() != e.inputs.size())
    throw Error(ErrorCode::DimMismatch, e.id + ": wrong number of inputs");
  e.check(inst.params);
  const Index n = inst.inputs.empty() ? 0 : inst.inputs[0].rows() / e.inputs[0].dim_factor;
  o.dim = n;
  std::vector<LabInput> lab;
  for (std::size_t i = 0; i < inst.inputs.size(); ++i) {
    if (inst.inputs[i].rows() != n * e.inputs[i].dim_factor || inst.inputs[i].cols() != inst.inputs[i].rows())
      throw Error(ErrorCode::DimMismatch, e.id + ": input dimensions disagree");
    lab.push_back(to_lab_input(e.inputs[i], inst.inputs[i]));
  }

  std::vector<LegValues> values;
  try {
    try {
      values = e.evaluate(lab, inst.params);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::SingularMatrix || !e.psd_stated) throw;
      o.limit = true;
      values = detail::limit_values(e, lab, inst.params, tol);
    }
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NonConvergedLimit && err.code() != ErrorCode::NonConvergence) throw;
    o.skipped = true;
    o.skip_reason = std::string(to_string(err.code()));
    o.min_margin = o.objective = std::numeric_limits<double>::infinity();
    o.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
  }

  o.min_margin = o.objective = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < e.legs.size(); ++i) {
    LegResult r = judge(e.legs[i], values.at(i), tol);
    if (r.gating) {
      o.holds = o.holds && r.holds;
      o.min_margin = std::min(o.min_margin, r.margin);
      o.objective = std::min(o.objective, r.objective);
    }
    o.legs.push_back(std::move(r));
  }
  o.violation = o.objective < -tol.strictness;
  o.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

inline Outcome evaluate(std::string_view id, const Instance& inst, const Tolerances& tol) {
  return evaluate(lookup(id), inst, tol);
}

// ---------------------------------------------------------------------------
// Suite

struct EntrySummary {
  std::string id;
  Status status = Status::theorem;
  long trials = 0;
  long failures = 0;  // asserted entries: outcomes that do not hold; others: strict violations
  long skipped = 0;
  long violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string verdict;
  bool expected = true;
};

/// Skips tolerated for an asserted entry before it counts as not verified.
constexpr double kSkipAllowance = 0.01;

inline std::vector<EntrySummary> summarize(const std::vector<std::string>& ids, const std::vector<Outcome>& outcomes) {
  std::vector<EntrySummary> out;
  for (const auto& id : ids) {
    const Entry& e = lookup(id);
    EntrySummary s;
    s.id = id;
    s.status = e.status;
    for (const auto& o : outcomes) {
      if (o.id != id) continue;
      ++s.trials;
      if (o.skipped) {
        ++s.skipped;
        continue;
      }
      if (o.violation) ++s.violations;
      if (is_asserted(e.status) ? !o.holds : o.violation) ++s.failures;
      s.worst_margin = std::min(s.worst_margin, o.objective);
    }
    if (is_asserted(e.status)) {
      if (s.failures > 0) s.verdict = "violated";
      else if (double(s.skipped) > kSkipAllowance * double(s.trials)) s.verdict = "too-many-skips";
      else s.verdict = "holds";
      s.expected = s.verdict == "holds";
    } else if (e.status == Status::example_refutation) {
      s.verdict = s.violations > 0 ? "refuted" : "not-refuted";
      s.expected = s.violations > 0;
    } else if (!e.refuted_by.empty()) {
      s.verdict = s.violations > 0 ? "refuted" : "consistent";
      s.expected = true;
    } else {
      s.verdict = s.violations > 0 ? "violation-found" : "consistent";
      s.expected = s.violations == 0;
    }
    out.push_back(std::move(s));
  }
  return out;
}

struct SuiteConfig {
  std::vector<std::string> ids;
  std::vector<Index> dims;
  long trials = 1;
  std::uint64_t seed = 0;
  Tolerances tol;
};

/// Outcomes ordered by (id, dim, trial); trial i of (id, dim) draws from its
/// own counter-based stream, so the result is independent of thread count.
inline std::vector<Outcome> run_suite(const SuiteConfig& cfg, unsigned threads = thread_count()) {
  if (cfg.trials < 1) throw Error(ErrorCode::BadSpec, "trials must be at least 1");
  struct Task {
    const Entry* entry;
    Index dim;
    long trial;
  };
  std::vector<Task> tasks;
  for (const auto& id : cfg.ids) {
    const Entry& e = lookup(id);
    for (Index n : cfg.dims)
      for (long t = 0; t < cfg.trials; ++t) tasks.push_back({&e, n, t});
  }
  std::vector<Outcome> out(tasks.size());
  parallel_for(
      tasks.size(),
      [&](std::size_t i) {
        const Task& task = tasks[i];
        Outcome o = evaluate(*task.entry, random_instance(*task.entry, task.dim, task.trial, cfg.seed, cfg.tol), cfg.tol);
        o.trial = task.trial;
        out[i] = std::move(o);
      },
      threads);
  return out;
}

}  // namespace logmaj
