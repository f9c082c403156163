#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "obw/error.hpp"
#include "obw/quad.hpp"
#include "obw/weights.hpp"
#include "oracles.hpp"

using namespace obw;

namespace {
Weight uniform01() { return builtin_weight({"uniform", {}}, 0.0, 1.0); }
}  // namespace

TEST(Integrate, ZeroIntegrand) {
  const QuadResult r = integrate([](double) { return 0.0; }, 0.0, 1.0);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_LE(r.error, 1e-15);
}

TEST(Integrate, Square) {
  const QuadResult r = integrate([](double t) { return t * t; }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-12);
  EXPECT_LE(r.error, 1e-10);
}

TEST(Integrate, SineOverHalfPeriod) {
  const QuadResult r =
      integrate([](double t) { return std::sin(t); }, 0.0, std::numbers::pi);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_LE(r.error, 1e-10);
}

TEST(Integrate, OrientedAndEmpty) {
  auto g = [](double t) { return std::exp(t); };
  EXPECT_NEAR(integrate(g, 1.0, 0.0).value, -(std::exp(1.0) - 1.0), 1e-12);
  EXPECT_EQ(integrate(g, 0.4, 0.4).value, 0.0);
}

TEST(Integrate, KinkAtBreakpoint) {
  auto g = [](double t) { return std::abs(t - 0.3); };
  const std::array<double, 1> split{0.3};
  EXPECT_NEAR(integrate(g, 0.0, 1.0, split).value, 0.5 * (0.09 + 0.49), 1e-14);
}

TEST(Integrate, MatchesOracleOnOscillatoryIntegrand) {
  auto g = [](double t) { return std::sin(25.0 * t) * std::exp(-t); };
  EXPECT_NEAR(integrate(g, 0.0, 2.0).value, oracle::integrate(g, 0.0, 2.0), 1e-11);
}

TEST(Integrate, NonFiniteIntegrandThrows) {
  auto g = [](double t) { return t > 0.5 ? std::numeric_limits<double>::quiet_NaN() : t; };
  EXPECT_THROW(integrate(g, 0.0, 1.0), QuadratureError);
}

TEST(Integrate, SubdivisionLimitThrows) {
  QuadConfig cfg;
  cfg.max_subdivisions = 3;
  auto g = [](double t) { return std::sin(200.0 * t); };
  EXPECT_THROW(integrate(g, 0.0, 10.0, cfg), QuadratureError);
}

TEST(Integrate, SingularEndpointSubstitution) {
  // integral of t^(-1/2) (1 - t)^(-1/2) over [0, 1] is pi.
  auto g = [](double t) { return 1.0 / std::sqrt(t * (1.0 - t)); };
  const QuadResult r = integrate_singular(g, 0.0, 1.0, {-0.5, -0.5});
  EXPECT_NEAR(r.value, std::numbers::pi, 1e-9);
}

TEST(QuadConfig, ValidateRejectsBadValues) {
  QuadConfig cfg;
  cfg.abs_tol = 0.0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = QuadConfig{};
  cfg.max_subdivisions = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(QuadConfig, EnvironmentOverride) {
  ::setenv("OBW_TOL", "1e-6", 1);
  EXPECT_DOUBLE_EQ(default_quad_config().abs_tol, 1e-6);
  ::setenv("OBW_TOL", "abc", 1);
  EXPECT_THROW(default_quad_config(), SpecError);
  ::unsetenv("OBW_TOL");
  EXPECT_DOUBLE_EQ(default_quad_config().abs_tol, 1e-10);
}

TEST(Derivative, ClosedFormPreferred) {
  const Fn1D f = make_fn("sq", [](double t) { return t * t; },
                         RealFn([](double) { return 42.0; }));
  EXPECT_EQ(derivative_at(f, 0.5, 0.0, 1.0), 42.0);
}

TEST(Derivative, FiniteDifferenceStaysInsideInterval) {
  // sqrt is undefined left of 0: the difference must go one-sided there.
  const Fn1D f = make_fn("sqrt", [](double t) {
    if (t < 0.0) throw DomainError("left of domain");
    return std::sqrt(t);
  });
  EXPECT_NEAR(derivative_at(f, 1e-12 + 0.25, 0.25, 1.0), 1.0, 1e-6);
  EXPECT_NEAR(derivative_at(f, 0.5, 0.0, 1.0), 0.5 / std::sqrt(0.5), 1e-8);
}

TEST(WeightedIntegral, Examples) {
  const Weight u = uniform01();
  const Weight inc = builtin_weight({"increasing", {}}, 0.0, 1.0);
  EXPECT_NEAR(weighted_integral(constant_fn(1.0), u, 0.0, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(weighted_integral(make_fn("t", [](double t) { return t; }), inc, 0.0, 1.0),
              1.0 / 3.0, 1e-12);
  EXPECT_NEAR(
      weighted_integral(make_fn("t2", [](double t) { return t * t; }), u, 0.0, 0.5),
      0.0416667, 1e-7);
}

TEST(WeightedMean, Examples) {
  const Weight u = uniform01();
  const Weight inc = builtin_weight({"increasing", {}}, 0.0, 1.0);
  const Weight expw = builtin_weight({"exponential", {}}, 0.0, 1.0);
  EXPECT_NEAR(weighted_mean(constant_fn(5.0), expw, 0.2, 0.7), 5.0, 1e-12);
  EXPECT_NEAR(weighted_mean(make_fn("t", [](double t) { return t; }), inc, 0.0, 1.0),
              2.0 / 3.0, 1e-12);
  EXPECT_NEAR(weighted_mean(make_fn("t2", [](double t) { return t * t; }), u, 0.5, 1.0),
              0.583333, 1e-6);
}

TEST(WeightedMean, DegenerateSubinterval) {
  const Weight u = uniform01();
  EXPECT_THROW(weighted_mean(constant_fn(1.0), u, 0.3, 0.3), DegenerateError);
  const Weight dec = builtin_weight({"decreasing", {}}, 0.0, 1.0);
  EXPECT_THROW(weighted_mean(constant_fn(1.0), dec, 1.0 - 1e-9, 1.0), DegenerateError);
}

TEST(UnweightedMean, Examples) {
  EXPECT_NEAR(unweighted_mean(constant_fn(1.0), 2.0, 7.0), 1.0, 1e-14);
  EXPECT_NEAR(unweighted_mean(make_fn("t", [](double t) { return t; }), 0.0, 1.0), 0.5,
              1e-14);
  EXPECT_NEAR(unweighted_mean(make_fn("t2", [](double t) { return t * t; }), 0.0, 1.0),
              1.0 / 3.0, 1e-12);
  EXPECT_THROW(unweighted_mean(constant_fn(1.0), 1.0, 1.0), Error);
}
