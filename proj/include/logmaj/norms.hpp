#pragma once

// Schatten p-norms, Ky Fan k-norms and Fan dominance.

#include "logmaj/linalg.hpp"

namespace logmaj {

/// p = infinity selects the operator norm.
template <class Real>
Real schatten_of(const Spectrum<Real>& s, Real p) {
  if (!(p >= Real(1))) throw Error(ErrorCode::InvalidP, "Schatten exponent below 1");
  if (s.empty()) return 0;
  if (std::isinf(p)) return s.max();
  // Factor out s_1 so large p does not overflow.
  const Real top = s.max();
  if (top == Real(0)) return 0;
  Real sum = 0;
  for (Real v : s.values()) sum += std::pow(v / top, p);
  return top * std::pow(sum, Real(1) / p);
}

template <class Real>
Real schatten(const Matrix<Real>& x, Real p) {
  if (!(p >= Real(1))) throw Error(ErrorCode::InvalidP, "Schatten exponent below 1");
  return schatten_of(singular_values(x), p);
}

template <class Real>
Real ky_fan_of(const Spectrum<Real>& s, Index k) {
  if (k < 1 || static_cast<std::size_t>(k) > s.size()) throw Error(ErrorCode::BadK, "Ky Fan index out of range");
  Real sum = 0;
  for (Index i = 0; i < k; ++i) sum += s[static_cast<std::size_t>(i)];
  return sum;
}

template <class Real>
Real ky_fan(const Matrix<Real>& x, Index k) {
  return ky_fan_of(singular_values(x), k);
}

template <class Real>
struct FanDominance {
  bool holds = true;
  std::vector<Real> gaps;  // gaps[k-1] = ky_fan(Y, k) - ky_fan(X, k)
  Real min_gap = std::numeric_limits<Real>::infinity();
};

/// |||X||| <= |||Y||| for every unitarily invariant norm, up to tol on each
/// Ky Fan norm.
template <class Real>
FanDominance<Real> fan_dominates_of(const Spectrum<Real>& sx, const Spectrum<Real>& sy, Real tol) {
  if (sx.size() != sy.size()) throw Error(ErrorCode::DimMismatch, "Fan dominance of different sizes");
  FanDominance<Real> out;
  Real cx = 0, cy = 0;
  for (std::size_t k = 0; k < sx.size(); ++k) {
    cx += sx[k];
    cy += sy[k];
    out.gaps.push_back(cy - cx);
    out.min_gap = std::min(out.min_gap, cy - cx);
  }
  out.holds = out.min_gap >= -tol;
  return out;
}

template <class Real>
FanDominance<Real> fan_dominates(const Matrix<Real>& x, const Matrix<Real>& y, Real tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(ErrorCode::DimMismatch, "Fan dominance of different sizes");
  return fan_dominates_of(singular_values(x), singular_values(y), tol);
}

}  // namespace logmaj
