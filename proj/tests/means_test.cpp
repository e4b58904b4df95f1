#include <gtest/gtest.h>

#include "logmaj/majorization.hpp"
#include "logmaj/means.hpp"
#include "logmaj/randgen.hpp"
#include "oracles.hpp"

using namespace logmaj;
using oracle::diag;
using oracle::mat;

namespace {

using P = Psd<double>;

double rel_fro(const MatrixD& x, const MatrixD& y) { return (x - y).norm() / y.norm(); }

P random_pd(Index n, Stream& rng, double cond = 1e3) {
  GenSpec g;
  g.dim = n;
  g.cond_target = cond;
  return P::from(random_matrix(g, rng));
}

}  // namespace

TEST(GeometricMean, SameInputsCollapse) {
  Stream rng(31, "aa");
  const P a = random_pd(3, rng);
  for (double t : {0.0, 0.3, 0.5, 1.0}) EXPECT_LE(rel_fro(geometric_mean_t(a, a, t, 0.0).matrix(), a.matrix()), 1e-12);
}

TEST(GeometricMean, IdentityGivesPower) {
  Stream rng(32, "ib");
  const P b = random_pd(4, rng);
  const P i = P::from(MatrixD::Identity(4, 4));
  for (double t : {0.25, 0.5, 0.8})
    EXPECT_LE(rel_fro(geometric_mean_t(i, b, t, 0.0).matrix(), matrix_power(b, t).matrix()), 1e-12);
}

TEST(GeometricMean, CommutingExample) {
  EXPECT_LE(rel_fro(geometric_mean_t(P::from(diag({1, 4})), P::from(diag({9, 1})), 0.5, 0.0).matrix(), diag({3, 2})),
            1e-14);
}

TEST(GeometricMean, EndpointsReturnInputs) {
  Stream rng(33, "ends");
  const P a = random_pd(3, rng), b = random_pd(3, rng);
  EXPECT_LE(rel_fro(geometric_mean_t(a, b, 0.0, 0.0).matrix(), a.matrix()), 1e-12);
  EXPECT_LE(rel_fro(geometric_mean_t(a, b, 1.0, 0.0).matrix(), b.matrix()), 1e-12);
}

TEST(GeometricMean, WeightSymmetry) {
  Stream rng(34, "sym");
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const P a = random_pd(n, rng), b = random_pd(n, rng);
    const double t = rng.uniform();
    EXPECT_LE(rel_fro(geometric_mean_t(a, b, t, 0.0).matrix(), geometric_mean_t(b, a, 1 - t, 0.0).matrix()), 1e-10);
  }
}

TEST(GeometricMean, DeterminantIsWeighted) {
  Stream rng(35, "det");
  for (int trial = 0; trial < 100; ++trial) {
    const P a = random_pd(3, rng), b = random_pd(3, rng);
    const double t = rng.uniform();
    const double got = det(geometric_mean_t(a, b, t, 0.0).hermitian()).log_abs();
    const double want = (1 - t) * det(a.hermitian()).log_abs() + t * det(b.hermitian()).log_abs();
    EXPECT_NEAR(std::exp(got - want), 1.0, 1e-9);
  }
}

TEST(GeometricMean, SingularWithoutRegularizationThrows) {
  try {
    geometric_mean_t(P::from(diag({1, 0})), P::from(diag({1, 1})), 0.5, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
  EXPECT_THROW(geometric_mean_t(P::from(diag({1, 1})), P::from(diag({1, 1})), 0.5, -1.0), Error);
}

TEST(GeometricMean, LadderReachesCommutingLimit) {
  // Commuting, with the zero in B only: the limit is diag(a^{1-t} b^t) and is
  // approached linearly in epsilon, so the ladder settles.
  const P a = P::from(diag({2, 3})), b = P::from(diag({5, 0}));
  const auto m = geometric_mean_t(a, b, 1.0, 1e-6);
  EXPECT_LE((m.matrix() - diag({5, 0})).norm(), 1e-8);
}

TEST(GeometricMean, LadderStabilityShrinksWithEpsilon) {
  Stream rng(36, "ladder");
  GenSpec g;
  g.dim = 3;
  g.kind = MatrixKind::psd;
  g.rank = 2;
  g.cond_target = 10;
  const P a = P::from(random_matrix(g, rng)), b = random_pd(3, rng, 10);
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const auto shifted = [&](double e) {
      return detail::mean_rt_definite(a.shifted(e), b.shifted(e), 1.0, 0.5).matrix();
    };
    const double step = (shifted(eps) - shifted(eps / 2)).norm();
    EXPECT_LT(step, previous);
    previous = step;
  }
}

TEST(GeneralizedMean, Reductions) {
  Stream rng(37, "rt");
  const P a = random_pd(3, rng), b = random_pd(3, rng);
  EXPECT_LE(rel_fro(generalized_mean_rt(a, b, 1.0, 0.4, 0.0).matrix(), geometric_mean_t(a, b, 0.4, 0.0).matrix()),
            1e-13);
  for (double r : {-1.0, 0.5, 2.0})
    EXPECT_LE(rel_fro(generalized_mean_rt(a, b, r, 0.0, 0.0).matrix(), matrix_power(a, r).matrix()), 1e-12);
  EXPECT_LE(rel_fro(generalized_mean_rt(P::from(diag({1, 4})), P::from(diag({9, 1})), 2.0, 0.5, 0.0).matrix(),
                    diag({3, 8})),
            1e-14);
}

TEST(GeneralizedMean, ParamsOverload) {
  Stream rng(38, "params");
  const P a = random_pd(2, rng), b = random_pd(2, rng);
  MeanParams<double> p;
  p.r = 1.5;
  p.t = 0.3;
  p.epsilon = 0;
  EXPECT_EQ(generalized_mean_rt(a, b, p).matrix(), generalized_mean_rt(a, b, 1.5, 0.3, 0.0).matrix());
}

TEST(NaturalNatural, Examples) {
  Stream rng(39, "nn");
  const P a = random_pd(3, rng);
  EXPECT_LE(rel_fro(natural_natural(a, a, 0.0).matrix(), a.matrix()), 1e-12);
  EXPECT_LE(rel_fro(natural_natural(P::from(diag({1, 4})), P::from(diag({9, 1})), 0.0).matrix(), diag({3, 2})), 1e-14);
}

TEST(NaturalNatural, TwoByTwoWithIdentity) {
  const MatrixD a = mat({{2, 1}, {1, 1}});
  const MatrixD ra = oracle::sqrt2(a);
  const MatrixD want = ra * oracle::sqrt2(oracle::inv2(a)) * ra;
  const auto got = natural_natural(P::from(a), P::from(MatrixD::Identity(2, 2)), 0.0);
  EXPECT_LE(rel_fro(got.matrix(), want), 1e-10);
}

TEST(NaturalNatural, SingularNeedsRegularization) {
  try {
    natural_natural(P::from(diag({1, 1})), P::from(diag({1, 0})), 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Means, CommutingPairsMatchScalarForms) {
  Stream rng(40, "commuting");
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(4));
    std::vector<double> da(static_cast<std::size_t>(n)), db(da.size());
    for (auto& v : da) v = std::exp(rng.uniform(-3, 3));
    for (auto& v : db) v = std::exp(rng.uniform(-3, 3));
    const double t = rng.uniform(), r = rng.uniform(-2, 2);
    const P a = P::from(diag(da)), b = P::from(diag(db));
    const auto g = geometric_mean_t(a, b, t, 0.0).matrix();
    const auto grt = generalized_mean_rt(a, b, r, t, 0.0).matrix();
    const auto nn = natural_natural(a, b, 0.0).matrix();
    for (Index i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      EXPECT_NEAR(g(i, i).real() / oracle::mean_t(da[k], db[k], t), 1.0, 1e-12);
      EXPECT_NEAR(grt(i, i).real() / oracle::mean_rt(da[k], db[k], r, t), 1.0, 1e-12);
      EXPECT_NEAR(nn(i, i).real() / oracle::natural_natural(da[k], db[k]), 1.0, 1e-12);
    }
  }
}

TEST(Means, GeometricLogMajorizedByNaturalNatural) {
  Stream rng(41, "lin");
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const P a = random_pd(n, rng), b = random_pd(n, rng);
    const auto x = geometric_mean_t(a, b, 0.5, 0.0).eigenvalues();
    const auto y = natural_natural(a, b, 0.0).eigenvalues();
    EXPECT_GE(log_majorizes(x, y, 1e-9, 1e-8).min_margin, -1e-9);
  }
}
