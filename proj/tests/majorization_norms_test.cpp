#include <gtest/gtest.h>

#include "logmaj/majorization.hpp"
#include "logmaj/means.hpp"
#include "logmaj/norms.hpp"
#include "logmaj/randgen.hpp"
#include "oracles.hpp"

using namespace logmaj;
using oracle::diag;

namespace {

using S = Spectrum<double>;
constexpr double kTol = 1e-9, kTolDet = 1e-8;
const double inf = std::numeric_limits<double>::infinity();

S spec(std::initializer_list<double> v) { return S::from_unsorted(std::vector<double>(v)); }

S random_positive(std::size_t n, Stream& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = std::exp(rng.uniform(-4, 4));
  return S::from_unsorted(std::move(v));
}

}  // namespace

TEST(WeakLog, Examples) {
  auto v = weak_log_majorizes(spec({2, 1}), spec({2, 1}), kTol);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.k_margins, (std::vector<double>{0, 0}));

  v = weak_log_majorizes(spec({1, 1}), spec({2, 1}), kTol);
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.k_margins[0], std::log(2.0), 1e-15);
  EXPECT_NEAR(v.k_margins[1], std::log(2.0), 1e-15);

  v = weak_log_majorizes(spec({3, 1}), spec({2, 2}), kTol);
  EXPECT_FALSE(v.holds);
  EXPECT_NEAR(v.k_margins[0], std::log(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(v.k_margins[1], std::log(4.0 / 3.0), 1e-15);
}

TEST(WeakLog, ProductTieWithPrefixViolation) {
  const auto v = weak_log_majorizes(spec({4, 1}), spec({2, 2}), kTol);
  EXPECT_FALSE(v.holds);
  EXPECT_NEAR(v.k_margins[1], 0, 1e-15);
}

TEST(WeakLog, LengthAndSignChecks) {
  try {
    weak_log_majorizes(spec({1}), spec({1, 2}), kTol);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
  EXPECT_THROW(weak_log_majorizes(spec({1, -1}), spec({1, 1}), kTol), Error);
}

TEST(ZeroSentinels, BothZeroSatisfied) {
  const auto v = weak_log_majorizes(spec({2, 0}), spec({3, 0}), kTol);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.k_margins[1], 0);
}

TEST(ZeroSentinels, ZeroOnlyOnBoundFails) {
  const auto v = weak_log_majorizes(spec({2, 1}), spec({3, 0}), kTol);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.k_margins[1], -inf);
}

TEST(ZeroSentinels, ZeroOnlyOnLeftSatisfied) {
  const auto v = weak_log_majorizes(spec({2, 0}), spec({3, 1}), kTol);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.k_margins[1], inf);
}

TEST(Log, Examples) {
  EXPECT_FALSE(log_majorizes(spec({4, 1}), spec({2, 2}), kTol, kTolDet).holds);
  const auto v = log_majorizes(spec({2, 2}), spec({4, 1}), kTol, kTolDet);
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.k_margins[0], std::log(2.0), 1e-15);
  EXPECT_NEAR(v.k_margins[1], 0, 1e-15);
  EXPECT_LE(v.det_gap, 1e-15);
}

TEST(Log, DeterminantMismatchFailsAndDrivesObjective) {
  const auto v = log_majorizes(spec({1, 1}), spec({2, 1}), kTol, kTolDet);
  EXPECT_FALSE(v.holds);
  EXPECT_NEAR(v.det_gap, std::log(2.0), 1e-15);
  EXPECT_NEAR(objective(v, kTolDet), -std::log(2.0), 1e-15);
  EXPECT_NEAR(objective(weak_log_majorizes(spec({1, 1}), spec({2, 1}), kTol), kTolDet), std::log(2.0), 1e-15);
}

TEST(Log, SingleZeroProductIsInfiniteGap) {
  const auto v = log_majorizes(spec({2, 0}), spec({2, 1}), kTol, kTolDet);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.det_gap, inf);
}

TEST(Log, StoredThreeByThreePairSatisfiesMeanChain) {
  // s(A^{1/2}(A#B)B^{1/2}) <_log s(AB) on a fixed pair, with every product
  // formed by explicit 3x3 arithmetic.
  const MatrixD a = oracle::mat({{3.0, {0.5, 0.2}, 0.1}, {{0.5, -0.2}, 2.0, {0.0, 0.3}}, {0.1, {0.0, -0.3}, 1.0}});
  const MatrixD b = oracle::mat({{1.5, 0.4, {0.0, -0.1}}, {0.4, 0.8, 0.2}, {{0.0, 0.1}, 0.2, 2.5}});
  const auto pa = Psd<double>::from(a), pb = Psd<double>::from(b);
  const MatrixD w = matrix_sqrt(pa).matrix() * geometric_mean_t(pa, pb, 0.5, 0.0).matrix() * matrix_sqrt(pb).matrix();
  const auto v = log_majorizes(singular_values(w), singular_values(MatrixD(a * b)), kTol, kTolDet);
  EXPECT_TRUE(v.holds);
  EXPECT_GT(v.k_margins[0], 0);
}

TEST(ReverseLog, Examples) {
  EXPECT_TRUE(reverse_log_majorizes(spec({4, 1}), spec({2, 2}), kTol, kTolDet).holds);
  EXPECT_TRUE(reverse_log_majorizes(spec({3, 2, 1}), spec({3, 2, 1}), kTol, kTolDet).holds);
}

TEST(ReverseLog, PowerWordAgainstHermitianSquare) {
  // lambda(A^2 B A^{-1} B) >_log lambda(A B^2) on a stored 3x3 PD A and
  // Hermitian B; both sides computed as plain products.
  const MatrixD a = oracle::mat({{2.0, 0.3, 0.0}, {0.3, 1.0, {0.1, 0.1}}, {0.0, {0.1, -0.1}, 0.5}});
  const MatrixD b = oracle::mat({{0.0, 1.0, 0.2}, {1.0, -1.0, {0.0, 0.5}}, {0.2, {0.0, -0.5}, 0.7}});
  const MatrixD ainv = a.inverse();
  const auto lhs = eigenvalue_moduli(MatrixD(a * a * b * ainv * b));
  const auto rhs = eigenvalue_moduli(MatrixD(a * b * b));
  EXPECT_TRUE(reverse_log_majorizes(lhs, rhs, 1e-9, 1e-8).holds);
}

TEST(MajorizationProperties, ReflexiveScaleEquivariantAndImplication) {
  Stream rng(51, "maj");
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const S x = random_positive(n, rng), y = random_positive(n, rng);
    const auto self = weak_log_majorizes(x, x, kTol);
    EXPECT_TRUE(self.holds);
    for (double m : self.k_margins) EXPECT_EQ(m, 0);

    const double c = std::exp(rng.uniform(-3, 3));
    std::vector<double> cx(x.vector()), cy(y.vector());
    for (auto& v : cx) v *= c;
    for (auto& v : cy) v *= c;
    const auto a = weak_log_majorizes(x, y, kTol);
    const auto b = weak_log_majorizes(S::from_unsorted(cx), S::from_unsorted(cy), kTol);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(a.k_margins[k], b.k_margins[k], 1e-12);

    if (log_majorizes(x, y, kTol, kTolDet).holds) EXPECT_TRUE(a.holds);
  }
}

TEST(MajorizationProperties, Transitivity) {
  Stream rng(52, "trans");
  int chains = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    // y built from z by shrinking prefixes so chains occur often
    const S z = random_positive(n, rng);
    std::vector<double> yv(z.vector()), xv;
    for (auto& v : yv) v *= std::exp(-rng.uniform(0, 0.5));
    const S y = S::from_unsorted(yv);
    xv = y.vector();
    for (auto& v : xv) v *= std::exp(-rng.uniform(0, 0.5));
    const S x = S::from_unsorted(xv);
    if (weak_log_majorizes(x, y, kTol).holds && weak_log_majorizes(y, z, kTol).holds) {
      ++chains;
      EXPECT_TRUE(weak_log_majorizes(x, z, 2 * kTol).holds);
    }
  }
  EXPECT_GT(chains, 100);
}

TEST(Schatten, Examples) {
  for (Index n = 1; n <= 5; ++n)
    for (double p : {1.0, 1.5, 2.0, 3.0})
      EXPECT_NEAR(schatten(MatrixD(MatrixD::Identity(n, n)), p), std::pow(double(n), 1 / p), 1e-14);
  EXPECT_NEAR(schatten(diag({3, 4}), 2.0), 5, 1e-14);
  EXPECT_NEAR(schatten(diag({3, 4}), inf), 4, 1e-15);
  try {
    schatten(diag({3, 4}), 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidP);
  }
}

TEST(Schatten, LargeExponentDoesNotOverflow) {
  EXPECT_NEAR(schatten_of(spec({1e200, 1e200}), 4.0), 1e200 * std::pow(2.0, 0.25), 1e186);
}

TEST(KyFan, Examples) {
  EXPECT_NEAR(ky_fan(diag({3, 1}), 1), 3, 1e-15);
  EXPECT_NEAR(ky_fan(diag({3, 1}), 2), 4, 1e-15);
  Stream rng(53, "kf");
  const MatrixD u = random_unitary(4, rng);
  for (Index k = 1; k <= 4; ++k) EXPECT_NEAR(ky_fan(u, k), double(k), 1e-12);
  try {
    ky_fan(diag({3, 1}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadK);
  }
  EXPECT_THROW(ky_fan(diag({3, 1}), 0), Error);
}

TEST(Fan, Examples) {
  const auto self = fan_dominates(diag({3, 1}), diag({3, 1}), kTol);
  EXPECT_TRUE(self.holds);
  for (double g : self.gaps) EXPECT_EQ(g, 0);
  const auto f = fan_dominates(diag({1, 1}), diag({2, 0}), kTol);
  EXPECT_TRUE(f.holds);
  EXPECT_NEAR(f.gaps[0], 1, 1e-15);
  EXPECT_NEAR(f.gaps[1], 0, 1e-15);
  EXPECT_FALSE(fan_dominates(diag({2, 0}), diag({1, 1}), kTol).holds);
  try {
    fan_dominates(diag({1, 1}), diag({1, 1, 1}), kTol);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
}

TEST(NormProperties, UnitaryInvarianceMonotonicityTriangle) {
  Stream rng(54, "norms");
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.below(8));
    const MatrixD x = ginibre(n, n, rng), y = ginibre(n, n, rng);
    const MatrixD u = random_unitary(n, rng), v = random_unitary(n, rng);
    double previous = inf;
    for (double p : {1.0, 1.5, 2.0, 3.0, 5.0, inf}) {
      const double sx = schatten(x, p);
      EXPECT_NEAR(schatten(MatrixD(u * x * v), p), sx, 1e-10 * sx);
      EXPECT_LE(sx, previous * (1 + 1e-12));
      previous = sx;
    }
    for (double p : {1.0, 2.0, inf})
      EXPECT_LE(schatten(MatrixD(x + y), p), schatten(x, p) + schatten(y, p) + 1e-10 * (schatten(x, p) + schatten(y, p)));
  }
}

TEST(NormProperties, FanDominanceImpliesSchattenOrder) {
  Stream rng(55, "fan");
  int dominated = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(5));
    const MatrixD y = ginibre(n, n, rng);
    // X = contraction of Y, then rotated: always Fan dominated by Y
    MatrixD c = ginibre(n, n, rng);
    c /= singular_values(c).max();
    const MatrixD x = random_unitary(n, rng) * c * y;
    const auto f = fan_dominates(x, y, kTol);
    if (!f.holds) continue;
    ++dominated;
    for (double p : {1.0, 1.5, 2.0, 3.0, inf}) EXPECT_LE(schatten(x, p), schatten(y, p) + double(n) * kTol);
  }
  EXPECT_GT(dominated, 900);
}
