#include <gtest/gtest.h>

#include "logmaj/linalg.hpp"
#include "logmaj/randgen.hpp"
#include "oracles.hpp"

using namespace logmaj;
using oracle::cd;
using oracle::diag;
using oracle::mat;

namespace {

double rel_fro(const MatrixD& x, const MatrixD& y) { return (x - y).norm() / std::max(1e-300, y.norm()); }

MatrixD random_hermitian(Index n, Stream& rng) {
  GenSpec g;
  g.dim = n;
  g.kind = MatrixKind::hermitian;
  return random_matrix(g, rng);
}

MatrixD random_pd(Index n, Stream& rng, double cond = 1e3) {
  GenSpec g;
  g.dim = n;
  g.cond_target = cond;
  return random_matrix(g, rng);
}

}  // namespace

TEST(Eigen, DiagonalInputSortsDecreasing) {
  const auto s = eigenvalues(Hermitian<double>::from(diag({3, 1, 2})));
  EXPECT_EQ(s.vector(), (std::vector<double>{3, 2, 1}));
}

TEST(Eigen, RealTwoByTwo) {
  const auto s = eigenvalues(Hermitian<double>::from(mat({{2, 1}, {1, 2}})));
  EXPECT_NEAR(s[0], 3, 1e-14);
  EXPECT_NEAR(s[1], 1, 1e-14);
}

TEST(Eigen, ComplexTwoByTwoMatchesQuadraticFormula) {
  const cd i(0, 1);
  const auto s = eigenvalues(Hermitian<double>::from(mat({{2, i}, {-i, 2}})));
  const auto [l1, l2] = oracle::hermitian_eig2(2, 2, i);
  EXPECT_NEAR(s[0], l1, 1e-14);
  EXPECT_NEAR(s[1], l2, 1e-14);
  EXPECT_NEAR(l1, 3, 1e-15);
  EXPECT_NEAR(l2, 1, 1e-15);
}

TEST(Eigen, RandomTwoByTwoAgainstClosedForm) {
  Stream rng(11, "eig2");
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.normal(), c = rng.normal();
    const cd b(rng.normal(), rng.normal());
    const auto s = eigenvalues(Hermitian<double>::from(mat({{a, b}, {std::conj(b), c}})));
    const auto [l1, l2] = oracle::hermitian_eig2(a, c, b);
    const double scale = std::max(std::abs(l1), std::abs(l2));
    EXPECT_NEAR(s[0], l1, 1e-13 * scale);
    EXPECT_NEAR(s[1], l2, 1e-13 * scale);
  }
}

TEST(Eigen, ReconstructionOrthonormalityAndTrace) {
  Stream rng(12, "eig");
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.below(8));
    const MatrixD a = random_hermitian(n, rng);
    const auto d = eig_hermitian(Hermitian<double>::from(a));
    MatrixD lam = MatrixD::Zero(n, n);
    double sum = 0;
    for (Index i = 0; i < n; ++i) lam(i, i) = d.eigenvalues[static_cast<std::size_t>(i)], sum += d.eigenvalues[static_cast<std::size_t>(i)];
    const MatrixD& v = d.eigenvectors;
    EXPECT_LE((a - v * lam * v.adjoint()).norm(), 1e-12 * double(n) * a.norm());
    EXPECT_LE((v.adjoint() * v - MatrixD::Identity(n, n)).norm(), 1e-12 * double(n));
    EXPECT_NEAR(sum, a.trace().real(), 1e-12 * std::max(1.0, a.norm()));
    for (Index i = 1; i < n; ++i) EXPECT_GE(d.eigenvalues[static_cast<std::size_t>(i - 1)], d.eigenvalues[static_cast<std::size_t>(i)]);
  }
}

TEST(Eigen, LongDoubleAgreesWithDouble) {
  Stream rng(13, "eig-ld");
  const MatrixD a = random_hermitian(5, rng);
  const auto sd = eigenvalues(Hermitian<double>::from(a));
  const auto sl = eigenvalues(Hermitian<long double>::from(cast_matrix<long double>(a)));
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(double(sl[i]), sd[i], 1e-13 * a.norm());
}

TEST(Eigen, SweepCapRaisesNonConvergence) {
  Stream rng(14, "cap");
  const MatrixD a = random_hermitian(6, rng);
  EXPECT_THROW(eig_hermitian(Hermitian<double>::from(a), 0), Error);
}

TEST(Hermitian, CheckedRejectsNonHermitian) {
  try {
    Hermitian<double>::checked(mat({{1, 2}, {0, 1}}), 1e-12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
}

TEST(Hermitian, NonFiniteRejected) {
  EXPECT_THROW(Hermitian<double>::from(mat({{1, std::nan("")}, {0, 1}})), Error);
}

TEST(Psd, RejectsIndefinite) {
  try {
    Psd<double>::from(diag({1, -1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPsd);
  }
}

TEST(Psd, ClampsTinyNegativesAndFlagsRank) {
  const auto p = Psd<double>::from(diag({1, -1e-18, 0.5}));
  EXPECT_EQ(p.rank(), 2);
  EXPECT_FALSE(p.definite());
  EXPECT_TRUE(p.singular());
  EXPECT_EQ(p.eigenvalues().min(), 0.0);
  const auto q = Psd<double>::from(diag({1, 1e-3}));
  EXPECT_TRUE(q.definite());
}

TEST(MatrixPower, DiagonalSquareRoot) {
  const auto r = matrix_power(Psd<double>::from(diag({4, 9})), 0.5);
  EXPECT_LE(rel_fro(r.matrix(), diag({2, 3})), 1e-15);
}

TEST(MatrixPower, ZeroExponentIsIdentity) {
  Stream rng(15, "pow0");
  const auto a = Psd<double>::from(random_pd(4, rng));
  EXPECT_LE((matrix_power(a, 0.0).matrix() - MatrixD::Identity(4, 4)).norm(), 1e-15);
}

TEST(MatrixPower, SquareRootMatchesClosedForm) {
  const MatrixD m = mat({{2, 1}, {1, 2}});
  const double r3 = std::sqrt(3.0);
  const MatrixD want = mat({{r3 + 1, r3 - 1}, {r3 - 1, r3 + 1}}) / 2.0;
  EXPECT_LE(rel_fro(matrix_sqrt(Psd<double>::from(m)).matrix(), want), 1e-14);
  EXPECT_LE(rel_fro(oracle::sqrt2(m), want), 1e-15);
}

TEST(MatrixPower, RandomTwoByTwoSquareRoots) {
  Stream rng(16, "sqrt2");
  for (int trial = 0; trial < 100; ++trial) {
    const MatrixD m = oracle::random_pd2(rng);
    EXPECT_LE(rel_fro(matrix_sqrt(Psd<double>::from(m)).matrix(), oracle::sqrt2(m)), 1e-10);
  }
}

TEST(MatrixPower, NegativePowerOfSingularThrows) {
  try {
    matrix_power(Psd<double>::from(diag({1, 0})), -0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(MatrixPower, ExponentsMultiply) {
  Stream rng(17, "powmul");
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = Psd<double>::from(random_pd(1 + static_cast<Index>(rng.below(6)), rng, 1e2));
    const double s = rng.uniform(-2, 2), t = rng.uniform(-2, 2);
    const auto lhs = matrix_power(matrix_power(a, s), t);
    const auto rhs = matrix_power(a, s * t);
    EXPECT_LE(rel_fro(lhs.matrix(), rhs.matrix()), 1e-10) << "s=" << s << " t=" << t;
  }
}

TEST(SingularValues, Examples) {
  EXPECT_EQ(singular_values(diag({-3, 2})).vector(), (std::vector<double>{3, 2}));
  const auto z = singular_values(mat({{0, 2}, {0, 0}}));
  EXPECT_NEAR(z[0], 2, 1e-15);
  EXPECT_EQ(z[1], 0);
  Stream rng(18, "unit");
  const auto su = singular_values(random_unitary(5, rng));
  for (double s : su.values()) EXPECT_NEAR(s, 1, 1e-13);
}

TEST(SingularValues, TwoByTwoClosedForm) {
  Stream rng(19, "sv2");
  for (int trial = 0; trial < 200; ++trial) {
    const MatrixD x = ginibre(2, 2, rng);
    const auto s = singular_values(x);
    const auto [s1, s2] = oracle::singular_values2(x);
    EXPECT_NEAR(s[0], s1, 1e-13 * s1);
    EXPECT_NEAR(s[1], s2, 1e-11 * s1);
  }
}

TEST(SingularValues, MatchGramEigenvalues) {
  Stream rng(20, "svgram");
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.below(8));
    const MatrixD x = ginibre(n, n, rng);
    const auto s = singular_values(x);
    const auto e1 = eigenvalues(Hermitian<double>::from(x.adjoint() * x));
    const auto e2 = eigenvalues(Hermitian<double>::from(x * x.adjoint()));
    EXPECT_NEAR(s[0], std::sqrt(e1[0]), 1e-10 * s[0]);
    EXPECT_NEAR(s[0], std::sqrt(e2[0]), 1e-10 * s[0]);
  }
}

TEST(ProductSpectrum, Examples) {
  const auto c = eigenvalues_of_product(Psd<double>::from(diag({1, 2})), Psd<double>::from(diag({3, 4})));
  EXPECT_NEAR(c[0], 8, 1e-14);
  EXPECT_NEAR(c[1], 3, 1e-14);

  Stream rng(21, "prod");
  const auto b = Psd<double>::from(random_pd(4, rng));
  const auto ib = eigenvalues_of_product(Psd<double>::from(MatrixD::Identity(4, 4)), b);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ib[i], b.eigenvalues()[i], 1e-13 * b.eigenvalues().max());

  const MatrixD a2 = mat({{2, 1}, {1, 1}}), b2 = diag({1, 2});
  const auto p = eigenvalues_of_product(Psd<double>::from(a2), Psd<double>::from(b2));
  const auto [r1, r2] = oracle::real_roots2(a2 * b2);
  EXPECT_NEAR(p[0], r1, 1e-13);
  EXPECT_NEAR(p[1], r2, 1e-13);
  EXPECT_NEAR(r1, 2 + std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(r2, 2 - std::sqrt(2.0), 1e-14);
}

TEST(ProductSpectrum, Symmetric) {
  Stream rng(22, "prodsym");
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(5));
    const auto a = Psd<double>::from(random_pd(n, rng)), b = Psd<double>::from(random_pd(n, rng));
    const auto ab = eigenvalues_of_product(a, b), ba = eigenvalues_of_product(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i) EXPECT_NEAR(ab[i], ba[i], 1e-10 * ab.max());
  }
}

TEST(ProductSpectrum, TwoByTwoAgainstCharacteristicPolynomial) {
  Stream rng(23, "prod2");
  for (int trial = 0; trial < 100; ++trial) {
    const MatrixD a = oracle::random_pd2(rng), b = oracle::random_pd2(rng);
    const auto p = eigenvalues_of_product(Psd<double>::from(a), Psd<double>::from(b));
    const auto [r1, r2] = oracle::real_roots2(a * b);
    EXPECT_NEAR(p[0], r1, 1e-10 * r1);
    EXPECT_NEAR(p[1], r2, 1e-8 * r1);
  }
}

TEST(Words, CyclicSymmetrization) {
  Stream rng(24, "words");
  const auto a = Psd<double>::from(random_pd(3, rng)), b = Psd<double>::from(random_pd(3, rng));
  // AB: lambda(A^{1/2} B A^{1/2})
  const std::vector<WordFactor<double>> ab{WordFactor<double>::of(a), WordFactor<double>::of(b)};
  const auto s = real_eigenvalues_general<double>(ab);
  const auto want = eigenvalues_of_product(a, b);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(s.values()[i], want[i], 1e-12 * want.max());

  // B A B A^{-1}... any rotation landing on P W with W a palindrome: A B A B -> head A, tail B A B
  const std::vector<WordFactor<double>> abab{WordFactor<double>::of(a), WordFactor<double>::of(b),
                                             WordFactor<double>::of(a), WordFactor<double>::of(b)};
  const auto s2 = real_eigenvalues_general<double>(abab);
  const MatrixD m = a.matrix() * b.matrix() * a.matrix() * b.matrix();
  const auto direct = eigenvalue_moduli(m);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(s2.values()[i]), direct[i], 1e-10 * direct.max());
}

TEST(Words, CommutingDiagonalsMultiplyElementwise) {
  const auto a = Psd<double>::from(diag({1, 2, 3})), b = Psd<double>::from(diag({5, 1, 2}));
  const std::vector<WordFactor<double>> w{WordFactor<double>::of(a), WordFactor<double>::of(b)};
  const auto s = real_eigenvalues_general<double>(w);
  const std::vector<double> want{6, 5, 2};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(s.moduli()[i], want[i], 1e-14 * 6);
}

TEST(Words, NonSymmetrizableWordRejected) {
  const auto h1 = Hermitian<double>::from(diag({1, -1})), h2 = Hermitian<double>::from(mat({{0, 1}, {1, 0}}));
  const std::vector<WordFactor<double>> w{WordFactor<double>::of(h1), WordFactor<double>::of(h2)};
  try {
    real_eigenvalues_general<double>(w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedShape);
  }
}

TEST(Misc, HadamardDeterminantAdjoint) {
  const auto h = hadamard(Spectrum<double>::from_unsorted({2, 1}), Spectrum<double>::from_unsorted({3, 1}));
  EXPECT_EQ(h.vector(), (std::vector<double>{6, 1}));
  EXPECT_THROW(hadamard(Spectrum<double>::from_unsorted({1}), Spectrum<double>::from_unsorted({1, 2})), Error);
  EXPECT_NEAR(det(Hermitian<double>::from(diag({2, 3}))).value().real(), 6, 1e-14);
  EXPECT_NEAR(det(diag({2, 3})).value().real(), 6, 1e-14);
  const cd i(0, 1);
  EXPECT_EQ(adjoint(mat({{0, i}, {0, 0}})), mat({{0, 0}, {-i, 0}}));
}

TEST(Misc, DeterminantSurvivesUnderflow) {
  const MatrixD tiny = MatrixD::Identity(40, 40) * 1e-10;  // det = 1e-400
  const auto d = det(tiny);
  EXPECT_FALSE(d.is_zero());
  EXPECT_NEAR(d.log_abs(), 40 * std::log(1e-10), 1e-9);
  const auto dh = det(Hermitian<double>::from(tiny));
  EXPECT_NEAR(dh.log_abs(), 40 * std::log(1e-10), 1e-9);
}

TEST(Misc, LuDeterminantSignAndPhase) {
  const MatrixD p = mat({{0, 1}, {1, 0}});
  EXPECT_NEAR(det(p).value().real(), -1, 1e-15);
  const cd i(0, 1);
  const auto d = det(mat({{i, 0}, {0, 2}})).value();
  EXPECT_NEAR(d.real(), 0, 1e-15);
  EXPECT_NEAR(d.imag(), 2, 1e-15);
}
