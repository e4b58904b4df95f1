#pragma once

// Reproducible random PD / PSD / Hermitian matrices with a prescribed
// spectrum law, plus class-preserving perturbations for the search.

#include <string>

#include "logmaj/linalg.hpp"
#include "logmaj/rng.hpp"

namespace logmaj {

enum class MatrixKind { pd, psd, hermitian };

constexpr std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::pd: return "pd";
    case MatrixKind::psd: return "psd";
    case MatrixKind::hermitian: return "hermitian";
  }
  return "?";
}

struct GenSpec {
  Index dim = 2;
  MatrixKind kind = MatrixKind::pd;
  Index rank = 0;  // psd only; 0 means dim - 1
  double cond_target = 1e4;
  double scale = 1.0;

  Index effective_rank() const {
    if (kind != MatrixKind::psd) return dim;
    return rank == 0 ? std::max<Index>(dim - 1, 1) : rank;
  }

  void validate() const {
    if (dim < 1 || dim > 64) throw Error(ErrorCode::BadSpec, "dimension must be in [1, 64]");
    if (!(cond_target >= 1.0) || !std::isfinite(cond_target)) throw Error(ErrorCode::BadSpec, "cond_target must be >= 1");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorCode::BadSpec, "scale must be positive");
    if (kind == MatrixKind::psd && (effective_rank() < 1 || effective_rank() > dim))
      throw Error(ErrorCode::BadSpec, "rank must be in [1, dim]");
  }
};

using MatrixD = Matrix<double>;

/// n x n complex Ginibre matrix (independent standard complex normals).
inline MatrixD ginibre(Index rows, Index cols, Stream& rng) {
  MatrixD z(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
    }
  return z;
}

/// Haar-distributed unitary: Gram-Schmidt (twice, for orthogonality to
/// working precision) on the columns of a Ginibre sample.
inline MatrixD random_unitary(Index n, Stream& rng) {
  MatrixD q = ginibre(n, n, rng);
  for (Index j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    q.col(j) /= q.col(j).norm();
  }
  return q;
}

namespace detail {

inline MatrixD hermitian_from_spectrum(const MatrixD& q, const std::vector<double>& d) {
  MatrixD diag = MatrixD::Zero(q.rows(), q.rows());
  for (Index i = 0; i < q.rows(); ++i) diag(i, i) = d[static_cast<std::size_t>(i)];
  MatrixD m = q * diag * q.adjoint();
  return Hermitian<double>::from(m).matrix();
}

/// Extremes pinned at scale and scale/cond, the rest log-uniform between.
inline std::vector<double> log_uniform_spectrum(Index n, double scale, double cond, Stream& rng) {
  std::vector<double> d(static_cast<std::size_t>(n));
  const double lo = std::log(scale / cond), hi = std::log(scale);
  for (Index i = 0; i < n; ++i) {
    if (i == 0) d[0] = scale;
    else if (i == n - 1) d[static_cast<std::size_t>(i)] = scale / cond;
    else d[static_cast<std::size_t>(i)] = std::exp(rng.uniform(lo, hi));
  }
  return d;
}

/// Unit-Frobenius random Hermitian direction.
inline MatrixD hermitian_direction(Index n, Stream& rng) {
  MatrixD z = ginibre(n, n, rng);
  MatrixD h = Hermitian<double>::from(z).matrix();
  const double f = h.norm();
  return f > 0 ? MatrixD(h / f) : h;
}

}  // namespace detail

inline MatrixD random_matrix(const GenSpec& spec, Stream& rng) {
  spec.validate();
  const Index n = spec.dim;
  const MatrixD q = random_unitary(n, rng);
  std::vector<double> d = detail::log_uniform_spectrum(n, spec.scale, spec.cond_target, rng);
  switch (spec.kind) {
    case MatrixKind::pd:
      break;
    case MatrixKind::psd: {
      const Index r = spec.effective_rank();
      std::vector<double> top = detail::log_uniform_spectrum(r, spec.scale, spec.cond_target, rng);
      std::fill(d.begin(), d.end(), 0.0);
      std::copy(top.begin(), top.end(), d.begin());
      break;
    }
    case MatrixKind::hermitian: {
      for (double& v : d) v = rng.uniform() < 0.5 ? -v : v;
      if (n >= 2) {
        bool pos = false, neg = false;
        for (double v : d) (v > 0 ? pos : neg) = true;
        if (!pos) d[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))] *= -1;
        else if (!neg) d[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))] *= -1;
      }
      break;
    }
  }
  return detail::hermitian_from_spectrum(q, d);
}

/// M + magnitude * H for a unit random Hermitian H, projected back onto the
/// class of spec: PD spectra are floored at lambda_max / cond_target, PSD
/// keeps its top rank eigenvalues, Hermitian is only re-symmetrized.
inline MatrixD perturb(const MatrixD& m, const GenSpec& spec, double magnitude, Stream& rng) {
  if (!(magnitude > 0.0)) throw Error(ErrorCode::BadSpec, "perturbation magnitude must be positive");
  const Index n = m.rows();
  MatrixD x = m + magnitude * detail::hermitian_direction(n, rng);
  auto h = Hermitian<double>::from(x);
  if (spec.kind == MatrixKind::hermitian) return h.matrix();
  auto dec = eig_hermitian(h);
  std::vector<double> d(dec.eigenvalues.vector());
  double top = std::max(d.front(), 0.0);
  if (!(top > 0.0)) top = spec.scale;  // perturbation wiped out the matrix; restart from scale
  const double floor = top / spec.cond_target;
  const Index keep = spec.effective_rank();
  for (Index i = 0; i < n; ++i) {
    double& v = d[static_cast<std::size_t>(i)];
    if (i >= keep) v = 0.0;
    else v = std::max(v, floor);
  }
  return detail::hermitian_from_spectrum(dec.eigenvectors, d);
}

}  // namespace logmaj
