#include <gtest/gtest.h>

#include <cmath>

#include "obw/cdf.hpp"
#include "obw/corpus.hpp"
#include "obw/error.hpp"
#include "oracles.hpp"

using namespace obw;

namespace {

Weight uniform01() { return builtin_weight({"uniform", {}}, 0.0, 1.0); }

DensityModel uniform_model() { return DensityModel(constant_fn(1.0), uniform01()); }

DensityModel linear_model() {
  return DensityModel(make_fn("2u", [](double u) { return 2.0 * u; },
                              RealFn([](double) { return 2.0; })),
                      uniform01());
}

DensityModel quadratic_model() {
  return DensityModel(make_fn("3u^2", [](double u) { return 3.0 * u * u; },
                              RealFn([](double u) { return 6.0 * u; })),
                      uniform01());
}

}  // namespace

TEST(DensityModel, RejectsUnnormalisedOrNegative) {
  EXPECT_THROW(DensityModel(constant_fn(2.0), uniform01()), DomainError);
  EXPECT_THROW(DensityModel(make_fn("neg", [](double u) { return 2.0 - 4.0 * u + 0.0 * u; }),
                            uniform01()),
               DomainError);
  const DensityModel m = DensityModel::normalized(constant_fn(2.0), uniform01());
  EXPECT_NEAR(m.density()(0.3), 1.0, 1e-12);
}

TEST(CdfValue, Examples) {
  EXPECT_NEAR(cdf_value(uniform_model(), 0.3), 0.3, 1e-14);
  EXPECT_NEAR(cdf_value(linear_model(), 0.5), 0.25, 1e-14);
  EXPECT_EQ(cdf_value(linear_model(), 0.0), 0.0);
  EXPECT_THROW(cdf_value(linear_model(), 1.5), DomainError);
}

TEST(CdfValue, MonotoneWithUnitTotal) {
  for (const auto& m : corpus::density_models()) {
    double prev = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const double x = k / 20.0;
      const double F = cdf_value(m, x);
      EXPECT_GE(F, prev - 1e-14) << m.density().name << "/" << m.weight().name();
      EXPECT_EQ(F + reliability(m, x), 1.0);
      prev = F;
    }
    EXPECT_NEAR(prev, 1.0, 1e-8);
  }
}

TEST(Reliability, Examples) {
  EXPECT_EQ(reliability(linear_model(), 0.0), 1.0);
  EXPECT_NEAR(reliability(uniform_model(), 0.3), 0.7, 1e-14);
  EXPECT_NEAR(reliability(linear_model(), 0.5), 0.75, 1e-14);
}

TEST(CdfBoundGeneral, Examples) {
  const CdfBound u = cdf_bound_general(uniform_model(), {0.0, 1.0, 0.4, 2.0, 1.0}, 2.0);
  EXPECT_NEAR(u.lhs, 0.0, 1e-14);
  EXPECT_EQ(u.bounds.inf, 0.0);
  EXPECT_EQ(u.bounds.one, 0.0);

  const CdfBound l = cdf_bound_general(linear_model(), {0.0, 1.0, 0.5, 1.0, 1.0}, 2.0);
  EXPECT_NEAR(l.tau, 0.0, 1e-14);
  EXPECT_NEAR(l.lhs, 0.0, 1e-14);

  // alpha = 1, beta = 0: lhs = m(a,x) m(x,b) |f(x) - F/m(a,x)|
  //                         = 0.5 * 0.5 * |0.75 - 0.125/0.5| = 0.125.
  const CdfBound q = cdf_bound_general(quadratic_model(), {0.0, 1.0, 0.5, 1.0, 0.0}, 2.0);
  EXPECT_NEAR(q.lhs, 0.125, 1e-13);
  EXPECT_NEAR(cdf_bound_left(quadratic_model(), 0.5, 2.0).bound.lhs, 0.25, 1e-13);
  EXPECT_LE(std::abs(q.identity_residual), 1e-10);
}

TEST(CdfBoundGeneral, AlgebraicBridgeAcrossCorpus) {
  for (const auto& m : corpus::density_models()) {
    for (double x : {0.2, 0.5, 0.85}) {
      for (auto [alpha, beta] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0},
                                 std::pair{1.0, 0.0}}) {
        const CdfBound r = cdf_bound_general(m, {0.0, 1.0, x, alpha, beta}, 2.0);
        EXPECT_LE(std::abs(r.identity_residual), 1e-10);
        EXPECT_LE(r.lhs, r.exact_bounds.inf * (1 + 1e-9) + 1e-15);
        EXPECT_LE(r.lhs, r.exact_bounds.one * (1 + 1e-9) + 1e-15);
      }
    }
  }
}

TEST(CdfBoundSymmetric, Examples) {
  EXPECT_NEAR(cdf_bound_symmetric(uniform_model(), 0.3, 2.0).lhs, 0.0, 1e-14);
  const CdfBound s = cdf_bound_symmetric(linear_model(), 0.25, 2.0);
  EXPECT_LE(std::abs(s.identity_residual), 1e-10);
  // Brute force: lhs = m(a,x) m(x,b) |tau| with alpha + beta = 1.
  const double left = oracle::integrate([](double u) { return 2.0 * u; }, 0.0, 0.25) / 0.25;
  const double right = oracle::integrate([](double u) { return 2.0 * u; }, 0.25, 1.0) / 0.75;
  const double t = 0.5 - 0.5 * (left + right);
  EXPECT_NEAR(s.lhs, 0.25 * 0.75 * std::abs(t), 1e-12);

  const CdfBound g = cdf_bound_general(linear_model(), {0.0, 1.0, 0.25, 0.5, 0.5}, 2.0);
  EXPECT_NEAR(s.bounds.inf, g.bounds.inf, 1e-12);
  EXPECT_NEAR(s.bounds.p, g.bounds.p, 1e-12);
  EXPECT_NEAR(s.bounds.one, g.bounds.one, 1e-12);
}

TEST(CdfBoundLeft, EqualityCase) {
  for (double x : {0.25, 0.5, 0.75}) {
    const CdfLeftBound r = cdf_bound_left(linear_model(), x, 2.0);
    EXPECT_NEAR(r.bound.lhs, x * x, 1e-12);
    EXPECT_NEAR(r.bound.lhs, r.bound.bounds.inf, 1e-9);
  }
  EXPECT_NEAR(cdf_bound_left(linear_model(), 0.5, 2.0).printed_lhs, 0.75, 1e-12);
}

TEST(CdfBoundLeft, UniformAndNearA) {
  EXPECT_NEAR(cdf_bound_left(uniform_model(), 0.6, 2.0).bound.lhs, 0.0, 1e-14);
  EXPECT_LT(cdf_bound_left(linear_model(), 1e-4, 2.0).bound.lhs, 1e-7);
}

TEST(Expectation, Examples) {
  EXPECT_NEAR(expectation_identity_check(uniform_model()), 0.0, 1e-12);
  EXPECT_NEAR(expectation_identity_check(linear_model()), 0.0, 1e-12);
  EXPECT_NEAR(expectation_identity_check(quadratic_model()), 0.0, 1e-12);
  for (const auto& m : corpus::density_models()) {
    EXPECT_LE(std::abs(expectation_identity_check(m)), 1e-8);
  }
}

TEST(CdfDerivativeSup, DensityTimesWeight) {
  EXPECT_NEAR(cdf_derivative_sup(linear_model()), 2.0, 1e-12);
}
