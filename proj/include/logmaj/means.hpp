#pragma once

// Weighted geometric mean, its two-exponent generalization, and the
// "natural-natural" mean, with the epsilon-limit extension to singular inputs.

#include <array>
#include <functional>

#include "logmaj/linalg.hpp"

namespace logmaj {

template <class Real>
struct MeanParams {
  Real t = Real(0.5);
  Real r = Real(1);
  Real s = Real(1);
  Real epsilon = Real(1e-6);  // base of the regularization ladder; 0 = strictly PD path
};

/// Relative Frobenius agreement required between consecutive ladder rungs.
template <class Real>
constexpr Real ladder_agreement() {
  return Real(1e-7);
}

/// The three rung multipliers applied to epsilon * lambda_max(A + B).
template <class Real>
constexpr std::array<Real, 3> ladder_rungs() {
  return {Real(1), Real(1e-2), Real(1e-4)};
}

namespace detail {

template <class Real>
Psd<Real> mean_rt_definite(const Psd<Real>& a, const Psd<Real>& b, Real r, Real t) {
  const Matrix<Real> inv_root = matrix_power(a, Real(-0.5)).matrix();
  const auto x = Psd<Real>::constructed(inv_root * b.matrix() * inv_root);
  const Matrix<Real> outer = matrix_power(a, r / Real(2)).matrix();
  return Psd<Real>::constructed(outer * matrix_power(x, t).matrix() * outer);
}

template <class Real>
Psd<Real> natural_definite(const Psd<Real>& a, const Psd<Real>& b) {
  const Matrix<Real> broot = matrix_sqrt(b).matrix();
  const Matrix<Real> ainv = matrix_power(a, Real(-1)).matrix();
  const auto inner = Psd<Real>::constructed(broot * ainv * broot);
  const Matrix<Real> aroot = matrix_sqrt(a).matrix();
  return Psd<Real>::constructed(aroot * matrix_sqrt(inner).matrix() * aroot);
}

/// Evaluates f on (A + e I, B + e I) down the ladder and returns the first
/// rung that agrees with its predecessor.
template <class Real, class F>
Psd<Real> ladder_limit(const Psd<Real>& a, const Psd<Real>& b, Real epsilon, F&& f) {
  const Real top = eigenvalues(Hermitian<Real>::from(a.matrix() + b.matrix())).max();
  if (!(top > Real(0))) throw Error(ErrorCode::SingularMatrix, "mean of two zero matrices");
  std::optional<Psd<Real>> previous;
  for (Real rung : ladder_rungs<Real>()) {
    const Real e = epsilon * rung * top;
    Psd<Real> current = f(a.shifted(e), b.shifted(e));
    if (previous) {
      const Real diff = (current.matrix() - previous->matrix()).norm();
      if (diff <= ladder_agreement<Real>() * current.matrix().norm()) return current;
    }
    previous = std::move(current);
  }
  throw Error(ErrorCode::NonConvergedLimit, "regularization ladder did not settle");
}

template <class Real>
void require_same_dim(const Psd<Real>& a, const Psd<Real>& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "mean of matrices of different size");
}

}  // namespace detail

/// A #_{r,t} B = A^{r/2} (A^{-1/2} B A^{-1/2})^t A^{r/2}.
template <class Real>
Psd<Real> generalized_mean_rt(const Psd<Real>& a, const Psd<Real>& b, Real r, Real t, Real epsilon) {
  detail::require_same_dim(a, b);
  if (epsilon < Real(0)) throw Error(ErrorCode::DomainViolation, "negative regularization");
  if (!a.definite() && epsilon == Real(0))
    throw Error(ErrorCode::SingularMatrix, "singular A needs a positive regularization");
  if (a.definite() && (b.definite() || epsilon == Real(0)))
    return detail::mean_rt_definite(a, b, r, t);
  return detail::ladder_limit(a, b, epsilon, [r, t](const Psd<Real>& x, const Psd<Real>& y) {
    return detail::mean_rt_definite(x, y, r, t);
  });
}

/// A #_t B.
template <class Real>
Psd<Real> geometric_mean_t(const Psd<Real>& a, const Psd<Real>& b, Real t, Real epsilon) {
  return generalized_mean_rt(a, b, Real(1), t, epsilon);
}

/// A^{1/2} (B^{1/2} A^{-1} B^{1/2})^{1/2} A^{1/2}.
template <class Real>
Psd<Real> natural_natural(const Psd<Real>& a, const Psd<Real>& b, Real epsilon) {
  detail::require_same_dim(a, b);
  if (epsilon < Real(0)) throw Error(ErrorCode::DomainViolation, "negative regularization");
  if (a.definite() && b.definite()) return detail::natural_definite(a, b);
  if (epsilon == Real(0)) throw Error(ErrorCode::SingularMatrix, "singular input needs a positive regularization");
  return detail::ladder_limit(a, b, epsilon, [](const Psd<Real>& x, const Psd<Real>& y) {
    return detail::natural_definite(x, y);
  });
}

template <class Real>
Psd<Real> geometric_mean_t(const Psd<Real>& a, const Psd<Real>& b, const MeanParams<Real>& p) {
  return geometric_mean_t(a, b, p.t, p.epsilon);
}

template <class Real>
Psd<Real> generalized_mean_rt(const Psd<Real>& a, const Psd<Real>& b, const MeanParams<Real>& p) {
  return generalized_mean_rt(a, b, p.r, p.t, p.epsilon);
}

}  // namespace logmaj
