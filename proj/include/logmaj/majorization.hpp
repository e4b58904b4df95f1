#pragma once

// Weak log-majorization, log-majorization and the reversed relation, with
// per-k log-scale margins.

#include <string_view>

#include "logmaj/linalg.hpp"

namespace logmaj {

enum class MajorizationKind { weak_log, log, reverse_log };

constexpr std::string_view to_string(MajorizationKind k) {
  switch (k) {
    case MajorizationKind::weak_log: return "weak_log";
    case MajorizationKind::log: return "log";
    case MajorizationKind::reverse_log: return "reverse_log";
  }
  return "?";
}

template <class Real>
struct MajorizationVerdict {
  MajorizationKind kind = MajorizationKind::weak_log;
  // margin[k-1] = sum_{i<=k} log y_i - sum_{i<=k} log x_i, with +-inf
  // sentinels when only one side has hit a zero.
  std::vector<Real> k_margins;
  Real det_gap = 0;  // |sum log x - sum log y|, log kinds only
  bool holds = true;
  Real min_margin = std::numeric_limits<Real>::infinity();
};

namespace detail {

/// Prefix margins under the zero rules: both sides at a zero -> 0 (0 <= 0),
/// only the bound (y) at zero -> -inf, only x at zero -> +inf.
template <class Real>
std::vector<Real> prefix_margins(const Spectrum<Real>& x, const Spectrum<Real>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "majorization: spectra differ in length");
  const std::size_t n = x.size();
  const Real inf = std::numeric_limits<Real>::infinity();
  std::vector<Real> margins(n);
  Real sum = 0;
  bool x_zero = false, y_zero = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < Real(0) || y[i] < Real(0))
      throw Error(ErrorCode::DomainViolation, "log-majorization of a negative entry");
    x_zero = x_zero || x[i] == Real(0);
    y_zero = y_zero || y[i] == Real(0);
    if (!x_zero && !y_zero) sum += std::log(y[i]) - std::log(x[i]);
    if (x_zero && y_zero) margins[i] = 0;
    else if (y_zero) margins[i] = -inf;
    else if (x_zero) margins[i] = inf;
    else margins[i] = sum;
  }
  return margins;
}

template <class Real>
Real min_over(const std::vector<Real>& m, std::size_t count) {
  Real out = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < count && i < m.size(); ++i) out = std::min(out, m[i]);
  return out;
}

}  // namespace detail

/// x weakly log-majorized by y: every prefix product of x is at most that of y.
template <class Real>
MajorizationVerdict<Real> weak_log_majorizes(const Spectrum<Real>& x, const Spectrum<Real>& y, Real tol) {
  MajorizationVerdict<Real> v;
  v.kind = MajorizationKind::weak_log;
  v.k_margins = detail::prefix_margins(x, y);
  v.min_margin = detail::min_over(v.k_margins, v.k_margins.size());
  v.holds = v.min_margin >= -tol;
  return v;
}

/// Weak log-majorization plus equal determinants. min_margin covers the
/// prefixes k < n; the k = n prefix is judged by det_gap instead.
template <class Real>
MajorizationVerdict<Real> log_majorizes(const Spectrum<Real>& x, const Spectrum<Real>& y, Real tol, Real tol_det) {
  MajorizationVerdict<Real> v;
  v.kind = MajorizationKind::log;
  v.k_margins = detail::prefix_margins(x, y);
  const std::size_t n = v.k_margins.size();
  v.min_margin = detail::min_over(v.k_margins, n > 1 ? n - 1 : n);
  if (n == 0) {
    v.det_gap = 0;
  } else {
    const Real last = v.k_margins.back();
    if (last == Real(0)) v.det_gap = 0;
    else v.det_gap = std::abs(last);  // infinite when exactly one product vanishes
  }
  v.holds = v.min_margin >= -tol && v.det_gap <= tol_det;
  return v;
}

/// x log-majorizes y, i.e. y is log-majorized by x.
template <class Real>
MajorizationVerdict<Real> reverse_log_majorizes(const Spectrum<Real>& x, const Spectrum<Real>& y, Real tol, Real tol_det) {
  auto v = log_majorizes(y, x, tol, tol_det);
  v.kind = MajorizationKind::reverse_log;
  return v;
}

/// Quantity the search minimizes: the prefix margin, or the determinant
/// mismatch (negated) when that is what breaks the relation.
template <class Real>
Real objective(const MajorizationVerdict<Real>& v, Real tol_det) {
  if (v.kind != MajorizationKind::weak_log && v.det_gap > tol_det) return std::min(v.min_margin, -v.det_gap);
  return v.min_margin;
}

}  // namespace logmaj
