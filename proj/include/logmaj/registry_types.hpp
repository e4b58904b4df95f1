#pragma once

// Vocabulary of the inequality registry: statuses, relations, parameter
// sets, entry definitions, per-leg results and check outcomes.

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "logmaj/linalg.hpp"
#include "logmaj/majorization.hpp"
#include "logmaj/norms.hpp"
#include "logmaj/randgen.hpp"

namespace logmaj {

/// Precision the registry evaluates in. Instances themselves are stored in
/// double so they serialize exactly.
using LabReal = long double;

enum class Status {
  theorem,
  lemma,
  corollary,
  proposition,
  internal_check,
  conditional,
  example_refutation,
  conjecture,
};

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::theorem: return "theorem";
    case Status::lemma: return "lemma";
    case Status::corollary: return "corollary";
    case Status::proposition: return "proposition";
    case Status::internal_check: return "internal_check";
    case Status::conditional: return "conditional";
    case Status::example_refutation: return "example_refutation";
    case Status::conjecture: return "conjecture";
  }
  return "?";
}

/// Entries whose claim is asserted to hold on every sample.
constexpr bool is_asserted(Status s) {
  return s != Status::example_refutation && s != Status::conjecture;
}

enum class Relation {
  weak_log,
  log,
  reverse_log,
  loewner_leq,
  eigenvalue_wise_leq,
  singular_value_wise_leq,
  norm_leq,
  fan_dominance,
  spectrum_union_equality,
  spectrum_equality,
  det_equality,
};

constexpr std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::weak_log: return "weak_log";
    case Relation::log: return "log";
    case Relation::reverse_log: return "reverse_log";
    case Relation::loewner_leq: return "loewner_leq";
    case Relation::eigenvalue_wise_leq: return "eigenvalue_wise_leq";
    case Relation::singular_value_wise_leq: return "singular_value_wise_leq";
    case Relation::norm_leq: return "norm_leq";
    case Relation::fan_dominance: return "fan_dominance";
    case Relation::spectrum_union_equality: return "spectrum_union_equality";
    case Relation::spectrum_equality: return "spectrum_equality";
    case Relation::det_equality: return "det_equality";
  }
  return "?";
}

constexpr bool is_majorization(Relation r) {
  return r == Relation::weak_log || r == Relation::log || r == Relation::reverse_log;
}

enum class InputClass { pd, psd, hermitian };

constexpr std::string_view to_string(InputClass c) {
  switch (c) {
    case InputClass::pd: return "pd";
    case InputClass::psd: return "psd";
    case InputClass::hermitian: return "hermitian";
  }
  return "?";
}

struct InputSpec {
  std::string name;
  InputClass cls = InputClass::pd;
  Index dim_factor = 1;  // the block matrix of the Schur-type lemma is 2n x 2n
};

/// Named real parameters, in declaration order.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, double>> init) : values_(init) {}

  void set(const std::string& name, double v) {
    for (auto& [k, x] : values_)
      if (k == name) {
        x = v;
        return;
      }
    values_.emplace_back(name, v);
  }

  double get(const std::string& name) const {
    for (const auto& [k, x] : values_)
      if (k == name) return x;
    throw Error(ErrorCode::DomainViolation, "missing parameter " + name);
  }

  bool has(const std::string& name) const {
    for (const auto& [k, x] : values_)
      if (k == name) return true;
    return false;
  }

  const std::vector<std::pair<std::string, double>>& items() const { return values_; }
  bool operator==(const Params&) const = default;

 private:
  std::vector<std::pair<std::string, double>> values_;
};

/// One axis of the box the sampler and the search move in. Entries map box
/// points onto their (possibly coupled) parameter domain.
struct Coord {
  std::string name;
  double lo = 0;
  double hi = 1;
};

struct LegInfo {
  std::string name;
  Relation relation = Relation::log;
  std::string lhs;
  std::string rhs;
  bool gating = true;  // non-gating legs are reported but do not decide the outcome
  std::vector<double> ps{};  // Schatten exponents for norm_leq (inf allowed)
};

/// Raw values of one leg, before the relation is applied.
struct LegValues {
  std::vector<LabReal> lhs;
  std::vector<LabReal> rhs;
  std::vector<LabReal> aux;  // Loewner legs: eigenvalues of rhs - lhs
};

/// Lab-precision view of an instance's matrices.
struct LabInput {
  Hermitian<LabReal> h;
  std::optional<Psd<LabReal>> p;

  const Psd<LabReal>& psd() const {
    if (!p) throw Error(ErrorCode::DomainViolation, "input is not PSD");
    return *p;
  }
  const Matrix<LabReal>& m() const { return h.matrix(); }
};

struct Entry {
  std::string id;
  std::string statement;
  std::string anchor;  // quoted phrase locating the claim in the source text
  Status status = Status::theorem;
  std::string refuted_by;
  std::vector<InputSpec> inputs;
  std::vector<Coord> coords;
  std::string domain;  // human-readable parameter domain
  std::vector<LegInfo> legs;
  /// Rank-deficient samples are drawn (and limits taken) only for entries
  /// stated for semi-definite inputs.
  bool psd_stated = false;
  std::function<Params(const std::vector<double>&)> map;
  std::function<void(const Params&)> check;
  /// Rough count of how many condition numbers the evaluated words stack up;
  /// sampling conditions inputs so that cond^load stays within budget.
  std::function<double(const Params&)> exponent_load;
  std::function<std::vector<LegValues>(const std::vector<LabInput>&, const Params&)> evaluate;
};

struct Tolerances {
  double tol = 1e-9;
  double tol_det = 1e-8;
  double strictness = 1e-6;
  double epsilon = 1e-6;      // base of the regularization ladder
  double cond_target = 1e4;
  double cond_budget = 1e8;   // cap on cond^exponent_load for suite samples
};

struct LegResult {
  std::string name;
  Relation relation = Relation::log;
  bool gating = true;
  bool holds = true;
  double margin = 0;     // relation-specific, negative = violated
  double objective = 0;  // what the search minimizes
  double det_gap = 0;
  std::vector<double> k_margins;
  std::vector<double> lhs;
  std::vector<double> rhs;
};

struct Instance {
  std::vector<MatrixD> inputs;
  Params params;
};

struct Outcome {
  std::string id;
  Index dim = 0;
  long trial = -1;
  Instance instance;
  std::vector<LegResult> legs;
  bool holds = true;
  double min_margin = 0;
  double objective = 0;
  bool violation = false;
  bool skipped = false;
  std::string skip_reason;
  bool limit = false;  // evaluated through the epsilon ladder
  double wall_time = 0;
};

}  // namespace logmaj
