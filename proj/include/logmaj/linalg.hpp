#pragma once

// Dense complex matrices and the spectral machinery everything else is built
// on: Hermitian eigendecomposition (cyclic Jacobi), singular values
// (one-sided Jacobi), spectral functions of PSD matrices, spectra of
// products, and determinants.
//
// All routines are templated on the real type so the same code runs in
// double and in extended precision.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "logmaj/error.hpp"

namespace logmaj {

using Index = Eigen::Index;

template <class Real>
using Complex = std::complex<Real>;

template <class Real>
using Matrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Real>
constexpr Real unit_roundoff() {
  return std::numeric_limits<Real>::epsilon() / 2;
}

/// Eigenvalues below this fraction of the largest one are exact zeros.
template <class Real>
Real zero_clamp(Index n) {
  return Real(64) * Real(n) * unit_roundoff<Real>();
}

/// Default admissible negative eigenvalue (relative to lambda_max) for a
/// matrix to still count as PSD; anything in [-tol, clamp) is set to 0.
template <class Real>
Real default_psd_tolerance(Index n) {
  return Real(4096) * Real(n) * unit_roundoff<Real>();
}

template <class Real>
Matrix<Real> identity(Index n) {
  return Matrix<Real>::Identity(n, n);
}

template <class To, class From>
Matrix<To> cast_matrix(const Matrix<From>& m) {
  return m.template cast<Complex<To>>();
}

template <class Real>
bool all_finite(const Matrix<Real>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

template <class Real>
void require_square_finite(const Matrix<Real>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorCode::DimMismatch, std::string(what) + ": matrix must be square and non-empty");
  if (!all_finite(m)) throw Error(ErrorCode::DomainViolation, std::string(what) + ": non-finite entry");
}

// ---------------------------------------------------------------------------
// Spectrum

/// Real vector kept in decreasing order.
template <class Real>
class Spectrum {
 public:
  Spectrum() = default;

  static Spectrum from_unsorted(std::vector<Real> values) {
    for (Real v : values)
      if (!std::isfinite(v)) throw Error(ErrorCode::DomainViolation, "spectrum entry is not finite");
    std::sort(values.begin(), values.end(), std::greater<Real>());
    Spectrum s;
    s.values_ = std::move(values);
    return s;
  }

  std::span<const Real> values() const& { return values_; }
  std::span<const Real> values() && = delete;  // would dangle
  const std::vector<Real>& vector() const& { return values_; }
  std::vector<Real> vector() && { return std::move(values_); }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  Real operator[](std::size_t i) const { return values_[i]; }
  Real max() const { return values_.empty() ? Real(0) : values_.front(); }
  Real min() const { return values_.empty() ? Real(0) : values_.back(); }

  /// Elementwise power of a nonnegative spectrum; order is kept for p > 0.
  Spectrum pow(Real p) const {
    std::vector<Real> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::pow(std::max(values_[i], Real(0)), p);
    return from_unsorted(std::move(out));
  }

  Spectrum abs() const {
    std::vector<Real> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(values_[i]);
    return from_unsorted(std::move(out));
  }

  template <class To>
  Spectrum<To> cast() const {
    return Spectrum<To>::from_unsorted(std::vector<To>(values_.begin(), values_.end()));
  }

 private:
  std::vector<Real> values_;
};

/// Real eigenvalues that may carry either sign, ordered by decreasing modulus.
template <class Real>
class SignedSpectrum {
 public:
  SignedSpectrum() = default;

  static SignedSpectrum from_unsorted(std::vector<Real> values) {
    std::stable_sort(values.begin(), values.end(),
                     [](Real a, Real b) { return std::abs(a) > std::abs(b); });
    SignedSpectrum s;
    s.values_ = std::move(values);
    return s;
  }

  std::span<const Real> values() const& { return values_; }
  std::span<const Real> values() && = delete;  // would dangle
  std::size_t size() const { return values_.size(); }
  Real operator[](std::size_t i) const { return values_[i]; }

  Spectrum<Real> moduli() const {
    std::vector<Real> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(values_[i]);
    return Spectrum<Real>::from_unsorted(std::move(out));
  }

 private:
  std::vector<Real> values_;
};

/// Elementwise product of two spectra, re-sorted.
template <class Real>
Spectrum<Real> hadamard(const Spectrum<Real>& x, const Spectrum<Real>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "hadamard: spectra differ in length");
  std::vector<Real> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] * y[i];
  return Spectrum<Real>::from_unsorted(std::move(out));
}

// ---------------------------------------------------------------------------
// Hermitian

template <class Real>
class Hermitian {
 public:
  /// Symmetrizes to (M + M*)/2.
  static Hermitian from(const Matrix<Real>& m) {
    require_square_finite(m, "Hermitian");
    Hermitian h;
    h.m_ = (m + m.adjoint()) / Real(2);
    for (Index i = 0; i < h.m_.rows(); ++i) h.m_(i, i) = Complex<Real>(h.m_(i, i).real(), Real(0));
    return h;
  }

  /// As from(), but rejects inputs that are visibly non-Hermitian.
  static Hermitian checked(const Matrix<Real>& m, Real rel_tol) {
    require_square_finite(m, "Hermitian");
    const Real scale = m.norm();
    if ((m - m.adjoint()).norm() > rel_tol * std::max(scale, std::numeric_limits<Real>::min()))
      throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within tolerance");
    return from(m);
  }

  const Matrix<Real>& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

 private:
  Matrix<Real> m_;
};

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition

template <class Real>
struct EigenDecomposition {
  Spectrum<Real> eigenvalues;
  Matrix<Real> eigenvectors;  // columns, matching eigenvalues order
};

namespace detail {

// Rotation that annihilates the (p, q) entry of a Hermitian 2x2 block
// [[app, apq], [conj(apq), aqq]]: G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
template <class Real>
struct JacobiRotation {
  Real c;
  Real s;
  Complex<Real> phase_conj;  // e^{-i phi}
};

template <class Real>
JacobiRotation<Real> make_rotation(Real app, Real aqq, Complex<Real> apq) {
  const Real mag = std::abs(apq);
  const Real tau = (aqq - app) / (Real(2) * mag);
  const Real t = (tau >= Real(0) ? Real(1) : Real(-1)) / (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
  const Real c = Real(1) / std::sqrt(Real(1) + t * t);
  return {c, t * c, std::conj(apq) / mag};
}

// Columns (p, q) of m <- m * G.
template <class Real>
void rotate_columns(Matrix<Real>& m, Index p, Index q, const JacobiRotation<Real>& g) {
  for (Index k = 0; k < m.rows(); ++k) {
    const Complex<Real> mkp = m(k, p);
    const Complex<Real> mkq = g.phase_conj * m(k, q);
    m(k, p) = g.c * mkp - g.s * mkq;
    m(k, q) = g.s * mkp + g.c * mkq;
  }
}

// Rows (p, q) of m <- G* m.
template <class Real>
void rotate_rows(Matrix<Real>& m, Index p, Index q, const JacobiRotation<Real>& g) {
  const Complex<Real> phase = std::conj(g.phase_conj);
  for (Index k = 0; k < m.cols(); ++k) {
    const Complex<Real> mpk = m(p, k);
    const Complex<Real> mqk = phase * m(q, k);
    m(p, k) = g.c * mpk - g.s * mqk;
    m(q, k) = g.s * mpk + g.c * mqk;
  }
}

template <class Real>
Real max_off_diagonal(const Matrix<Real>& a) {
  Real out = 0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < j; ++i) out = std::max(out, std::abs(a(i, j)));
  return out;
}

}  // namespace detail

/// Cyclic complex Jacobi. A pair is rotated while its off-diagonal entry is
/// above n*eps*sqrt(|a_pp a_qq|); that relative test is stricter than the
/// absolute stopping rule max|a_pq| <= 1e-14 ||A||_F, which is what the
/// sweep cap is checked against.
template <class Real>
EigenDecomposition<Real> eig_hermitian(const Hermitian<Real>& h, int max_sweeps = 100) {
  Matrix<Real> a = h.matrix();
  const Index n = a.rows();
  Matrix<Real> v = identity<Real>(n);
  const Real fro = a.norm();
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real rel_tol = Real(n) * eps;
  const Real floor = eps * eps * fro;

  bool rotated = true;
  for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
    rotated = false;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Complex<Real> apq = a(p, q);
        const Real mag = std::abs(apq);
        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        if (mag <= floor || mag <= rel_tol * std::sqrt(std::abs(app * aqq))) continue;
        rotated = true;
        const auto g = detail::make_rotation(app, aqq, apq);
        detail::rotate_columns(a, p, q, g);
        detail::rotate_rows(a, p, q, g);
        detail::rotate_columns(v, p, q, g);
        a(p, q) = a(q, p) = Complex<Real>(0);
        a(p, p) = Complex<Real>(a(p, p).real(), 0);
        a(q, q) = Complex<Real>(a(q, q).real(), 0);
      }
    }
  }
  if (rotated && detail::max_off_diagonal(a) > Real(1e-14) * fro)
    throw Error(ErrorCode::NonConvergence, "Jacobi sweep cap reached");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return a(i, i).real() > a(j, j).real(); });
  std::vector<Real> values(static_cast<std::size_t>(n));
  Matrix<Real> vectors(n, n);
  for (Index k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = a(order[k], order[k]).real();
    vectors.col(k) = v.col(order[k]);
  }
  return {Spectrum<Real>::from_unsorted(std::move(values)), std::move(vectors)};
}

template <class Real>
Spectrum<Real> eigenvalues(const Hermitian<Real>& h) {
  return eig_hermitian(h).eigenvalues;
}

// ---------------------------------------------------------------------------
// PSD matrices

/// Positive semi-definite matrix held together with its (clamped)
/// eigendecomposition, so spectral functions never re-diagonalize.
template <class Real>
class Psd {
 public:
  static Psd from(const Hermitian<Real>& h, std::optional<Real> tol_psd = std::nullopt) {
    auto dec = eig_hermitian(h);
    const Index n = h.dim();
    const Real tol = tol_psd.value_or(default_psd_tolerance<Real>(n));
    const Real top = std::max(dec.eigenvalues.max(), Real(0));
    std::vector<Real> values(dec.eigenvalues.vector());
    for (Real& v : values) {
      if (v < -tol * top) throw Error(ErrorCode::NotPsd, "negative eigenvalue beyond tolerance");
      if (v < zero_clamp<Real>(n) * top) v = Real(0);
    }
    if (top == Real(0)) std::fill(values.begin(), values.end(), Real(0));
    return from_spectral(std::move(dec.eigenvectors), std::move(values));
  }

  static Psd from(const Matrix<Real>& m, std::optional<Real> tol_psd = std::nullopt) {
    return from(Hermitian<Real>::from(m), tol_psd);
  }

  /// Result of a congruence or other construction that is PSD in exact
  /// arithmetic: negative rounding noise is clamped instead of rejected.
  static Psd constructed(const Matrix<Real>& m) { return from(Hermitian<Real>::from(m), Real(1)); }

  /// Trusted construction from an orthonormal basis and nonnegative values.
  static Psd from_spectral(Matrix<Real> vectors, std::vector<Real> values) {
    const Index n = vectors.rows();
    std::vector<Index> order(values.size());
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
      return values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(j)];
    });
    auto data = std::make_shared<Data>();
    data->vectors = Matrix<Real>(n, n);
    std::vector<Real> sorted(values.size());
    for (Index k = 0; k < n; ++k) {
      data->vectors.col(k) = vectors.col(order[k]);
      sorted[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(order[k])];
    }
    data->values = Spectrum<Real>::from_unsorted(std::move(sorted));
    const Real top = data->values.max();
    const Real clamp = zero_clamp<Real>(n) * top;
    data->rank = 0;
    for (Real v : data->values.values())
      if (v > clamp && v > Real(0)) ++data->rank;
    data->definite = top > Real(0) && data->values.min() > default_psd_tolerance<Real>(n) * top;
    Matrix<Real> m = data->vectors * data->values_diag() * data->vectors.adjoint();
    data->matrix = Hermitian<Real>::from(m);
    Psd p;
    p.data_ = std::move(data);
    return p;
  }

  const Matrix<Real>& matrix() const { return data_->matrix.matrix(); }
  const Hermitian<Real>& hermitian() const { return data_->matrix; }
  const Spectrum<Real>& eigenvalues() const { return data_->values; }
  const Matrix<Real>& eigenvectors() const { return data_->vectors; }
  Index dim() const { return data_->vectors.rows(); }
  Index rank() const { return data_->rank; }
  bool definite() const { return data_->definite; }
  bool singular() const { return data_->rank < dim(); }

  /// V diag(f(lambda)) V* as a PSD matrix.
  template <class F>
  Psd apply(F&& f) const {
    std::vector<Real> out(data_->values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(data_->values[i]);
    return from_spectral(data_->vectors, std::move(out));
  }

  /// A + eps I, exact in the eigenbasis.
  Psd shifted(Real eps) const {
    return apply([eps](Real v) { return v + eps; });
  }

 private:
  struct Data {
    Hermitian<Real> matrix;
    Matrix<Real> vectors;
    Spectrum<Real> values;
    Index rank = 0;
    bool definite = false;

    Matrix<Real> values_diag() const {
      Matrix<Real> d = Matrix<Real>::Zero(vectors.rows(), vectors.rows());
      for (Index i = 0; i < d.rows(); ++i) d(i, i) = values[static_cast<std::size_t>(i)];
      return d;
    }
  };
  std::shared_ptr<const Data> data_;
};

/// A^t for PSD A. Negative powers of a matrix with clamped-zero eigenvalues
/// are rejected; 0^0 is taken as 1 so A^0 = I.
template <class Real>
Psd<Real> matrix_power(const Psd<Real>& a, Real t) {
  if (t < Real(0) && a.singular())
    throw Error(ErrorCode::SingularMatrix, "negative power of a singular matrix");
  if (t == Real(0)) return Psd<Real>::from_spectral(identity<Real>(a.dim()), std::vector<Real>(a.dim(), Real(1)));
  if (t == Real(1)) return a;
  return a.apply([t](Real v) { return v > Real(0) ? std::pow(v, t) : Real(0); });
}

template <class Real>
Psd<Real> matrix_sqrt(const Psd<Real>& a) {
  return matrix_power(a, Real(0.5));
}

// ---------------------------------------------------------------------------
// Singular values

/// One-sided (Hestenes) Jacobi on the columns of X. Avoids forming X*X, so
/// small singular values keep relative accuracy.
template <class Real>
Spectrum<Real> singular_values(const Matrix<Real>& x, int max_sweeps = 100) {
  if (x.size() == 0) return {};
  if (!all_finite(x)) throw Error(ErrorCode::DomainViolation, "singular_values: non-finite entry");
  Matrix<Real> a = x;
  const Index n = a.cols();
  const Real tol = Real(std::max<Index>(n, a.rows())) * std::numeric_limits<Real>::epsilon();
  bool rotated = true;
  for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
    rotated = false;
    for (Index i = 0; i + 1 < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const Real alpha = a.col(i).squaredNorm();
        const Real beta = a.col(j).squaredNorm();
        const Complex<Real> gamma = a.col(i).dot(a.col(j));
        const Real mag = std::abs(gamma);
        if (mag == Real(0) || mag <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        detail::rotate_columns(a, i, j, detail::make_rotation(alpha, beta, gamma));
      }
    }
  }
  if (rotated) throw Error(ErrorCode::NonConvergence, "one-sided Jacobi sweep cap reached");
  std::vector<Real> values(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = a.col(k).norm();
  return Spectrum<Real>::from_unsorted(std::move(values));
}

// ---------------------------------------------------------------------------
// Products and words

template <class Real>
Matrix<Real> matmul(const Matrix<Real>& x, const Matrix<Real>& y) {
  if (x.cols() != y.rows()) throw Error(ErrorCode::DimMismatch, "matmul: inner dimensions differ");
  return x * y;
}

template <class Real>
Matrix<Real> adjoint(const Matrix<Real>& x) {
  return x.adjoint();
}

namespace detail {

template <class Real>
Spectrum<Real> clamp_nonnegative(const Spectrum<Real>& s, Index n) {
  const Real top = std::max(s.max(), Real(0));
  std::vector<Real> out(s.vector());
  for (Real& v : out)
    if (v < zero_clamp<Real>(n) * top) v = Real(0);
  return Spectrum<Real>::from_unsorted(std::move(out));
}

}  // namespace detail

/// lambda(AB) for PSD A, B, computed as lambda(A^{1/2} B A^{1/2}).
template <class Real>
Spectrum<Real> eigenvalues_of_product(const Psd<Real>& a, const Psd<Real>& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "eigenvalues_of_product: dimensions differ");
  const Matrix<Real> root = matrix_sqrt(a).matrix();
  const auto h = Hermitian<Real>::from(root * b.matrix() * root);
  return detail::clamp_nonnegative(eigenvalues(h), a.dim());
}

/// lambda(P H) for PSD P and Hermitian H via lambda(P^{1/2} H P^{1/2}).
template <class Real>
SignedSpectrum<Real> eigenvalues_of_product(const Psd<Real>& p, const Hermitian<Real>& h) {
  if (p.dim() != h.dim()) throw Error(ErrorCode::DimMismatch, "eigenvalues_of_product: dimensions differ");
  const Matrix<Real> root = matrix_sqrt(p).matrix();
  const auto sym = Hermitian<Real>::from(root * h.matrix() * root);
  return SignedSpectrum<Real>::from_unsorted(eigenvalues(sym).vector());
}

/// One factor of a matrix word. Factors are Hermitian; those known to be PSD
/// carry their decomposition so the word can be symmetrized around them.
template <class Real>
struct WordFactor {
  Hermitian<Real> value;
  std::optional<Psd<Real>> psd;

  static WordFactor of(const Psd<Real>& p) { return {p.hermitian(), p}; }
  static WordFactor of(const Hermitian<Real>& h) { return {h, std::nullopt}; }
};

/// Real spectrum of a product F_1 F_2 ... F_m of Hermitian factors, found by
/// cyclic symmetrization: some rotation of the word must read P W with P PSD
/// and W a palindrome (hence Hermitian); then lambda = lambda(P^{1/2} W P^{1/2}).
/// Words with no such rotation raise UnsupportedShape.
template <class Real>
SignedSpectrum<Real> real_eigenvalues_general(std::span<const WordFactor<Real>> word) {
  const std::size_t m = word.size();
  if (m == 0) throw Error(ErrorCode::UnsupportedShape, "empty word");
  const Index n = word[0].value.dim();
  for (const auto& f : word)
    if (f.value.dim() != n) throw Error(ErrorCode::DimMismatch, "word factors differ in dimension");

  auto same = [](const WordFactor<Real>& a, const WordFactor<Real>& b) {
    return a.value.matrix() == b.value.matrix();
  };
  for (std::size_t r = 0; r < m; ++r) {
    const auto& head = word[r];
    if (!head.psd) continue;
    bool palindrome = true;
    for (std::size_t i = 1, j = m - 1; i < j; ++i, --j) {
      if (!same(word[(r + i) % m], word[(r + j) % m])) {
        palindrome = false;
        break;
      }
    }
    if (!palindrome) continue;
    Matrix<Real> rest = identity<Real>(n);
    for (std::size_t i = 1; i < m; ++i) rest = rest * word[(r + i) % m].value.matrix();
    return eigenvalues_of_product(*head.psd, Hermitian<Real>::from(rest));
  }
  throw Error(ErrorCode::UnsupportedShape, "word admits no PSD-congruent cyclic form");
}

/// |lambda(X)| for a general square matrix via complex Schur (Eigen). Used
/// only where the word has genuinely complex spectrum.
template <class Real>
Spectrum<Real> eigenvalue_moduli(const Matrix<Real>& x) {
  require_square_finite(x, "eigenvalue_moduli");
  Eigen::ComplexEigenSolver<Matrix<Real>> solver(x, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NonConvergence, "complex Schur did not converge");
  std::vector<Real> out(static_cast<std::size_t>(x.rows()));
  for (Index i = 0; i < x.rows(); ++i) out[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()(i));
  return Spectrum<Real>::from_unsorted(std::move(out));
}

// ---------------------------------------------------------------------------
// Determinants

/// value = mantissa * 2^exponent with |mantissa| in [0.5, 1) or mantissa = 0.
template <class Real>
struct Determinant {
  Complex<Real> mantissa{0};
  long exponent = 0;

  Complex<Real> value() const { return mantissa * std::ldexp(Real(1), static_cast<int>(exponent)); }
  Real log_abs() const {
    return std::log(std::abs(mantissa)) + Real(exponent) * std::log(Real(2));
  }
  bool is_zero() const { return mantissa == Complex<Real>(0); }
};

namespace detail {

template <class Real>
class DeterminantAccumulator {
 public:
  void multiply(Complex<Real> z) {
    if (z == Complex<Real>(0)) {
      mantissa_ = 0;
      exponent_ = 0;
      zero_ = true;
    }
    if (zero_) return;
    int e = 0;
    const Real mag = std::frexp(std::abs(z), &e);
    mantissa_ *= (z / std::abs(z)) * mag;
    exponent_ += e;
    int f = 0;
    const Real norm = std::frexp(std::abs(mantissa_), &f);
    mantissa_ = mantissa_ / std::abs(mantissa_) * norm;
    exponent_ += f;
  }

  Determinant<Real> result() const { return {mantissa_, zero_ ? 0 : exponent_}; }

 private:
  Complex<Real> mantissa_{1};
  long exponent_ = 0;
  bool zero_ = false;
};

}  // namespace detail

/// Product of eigenvalues.
template <class Real>
Determinant<Real> det(const Hermitian<Real>& h) {
  detail::DeterminantAccumulator<Real> acc;
  const auto s = eigenvalues(h);
  for (Real v : s.values()) acc.multiply(Complex<Real>(v));
  return acc.result();
}

/// LU with partial pivoting.
template <class Real>
Determinant<Real> det(const Matrix<Real>& x) {
  require_square_finite(x, "det");
  Eigen::PartialPivLU<Matrix<Real>> lu(x);
  detail::DeterminantAccumulator<Real> acc;
  for (Index i = 0; i < x.rows(); ++i) acc.multiply(lu.matrixLU()(i, i));
  acc.multiply(Complex<Real>(Real(lu.permutationP().determinant())));
  return acc.result();
}

}  // namespace logmaj
