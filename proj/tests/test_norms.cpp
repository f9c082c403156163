#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "obw/error.hpp"
#include "obw/norms.hpp"
#include "oracles.hpp"

using namespace obw;

TEST(NormInf, MonotoneEndpointMaximum) {
  EXPECT_NEAR(norm_inf([](double t) { return 2.0 * t; }, 0.0, 1.0), 2.0, 1e-15);
}

TEST(NormInf, AbsoluteValueOfCosine) {
  EXPECT_NEAR(norm_inf([](double t) { return std::cos(t); }, 0.0, std::numbers::pi), 1.0,
              1e-15);
}

TEST(NormInf, InteriorExtremumIsRefined) {
  const double v = norm_inf([](double t) { return std::sin(10.0 * t); }, 0.0, 1.0);
  EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_LE(v, 1.0);
}

TEST(NormInf, NeverBelowDenseGrid) {
  auto g = [](double t) { return std::sin(37.0 * t) * (1.0 + t * t) - 0.3 * t; };
  const double v = norm_inf(g, -1.0, 2.0);
  EXPECT_GE(v, oracle::grid_max_abs(g, -1.0, 2.0) - 1e-12);
}

TEST(NormInf, NonFiniteThrows) {
  EXPECT_THROW(norm_inf([](double t) { return 1.0 / (t - 0.5) / 0.0; }, 0.0, 1.0),
               DomainError);
}

TEST(NormP, Examples) {
  auto g = [](double t) { return 2.0 * t; };
  EXPECT_NEAR(norm_p(g, 1.0, 0.0, 1.0), 1.0, 1e-13);
  EXPECT_NEAR(norm_p(g, 2.0, 0.0, 1.0), 2.0 / std::sqrt(3.0), 1e-12);
  EXPECT_EQ(norm_p([](double) { return 0.0; }, 3.0, 0.0, 1.0), 0.0);
}

TEST(NormP, MatchesOracleWithSignChange) {
  auto g = [](double t) { return std::cos(3.0 * t) - 0.2; };
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const double expect = std::pow(
        oracle::integrate([&](double t) { return std::pow(std::abs(g(t)), p); }, 0.0, 2.0,
                          20000),
        1.0 / p);
    EXPECT_NEAR(norm_p(g, p, 0.0, 2.0), expect, 1e-8) << "p=" << p;
  }
}

TEST(NormP, RejectsBadExponent) {
  auto g = [](double t) { return t; };
  EXPECT_THROW(norm_p(g, 0.5, 0.0, 1.0), DomainError);
  EXPECT_THROW(norm_p(g, INFINITY, 0.0, 1.0), DomainError);
}

TEST(NormTriple, OrderingOnUnitInterval) {
  // On an interval of length 1: ||g||_1 <= ||g||_p <= ||g||_inf.
  auto g = [](double t) { return std::exp(t) * std::sin(5.0 * t); };
  const std::array<double, 1> split{0.5};
  const NormTriple n = norm_triple(g, 0.0, 1.0, 2.5, split);
  EXPECT_LE(n.one, n.p_norm + 1e-12);
  EXPECT_LE(n.p_norm, n.inf + 1e-12);
  EXPECT_DOUBLE_EQ(n.p, 2.5);
  EXPECT_NEAR(n.q(), 2.5 / 1.5, 1e-15);
  EXPECT_THROW(norm_triple(g, 0.0, 1.0, 1.0), DomainError);
}

TEST(MakeNorm, CarriesKindAndConjugate) {
  auto g = [](double t) { return t; };
  const NormValue v = make_norm(NormKind::p, g, 0.0, 1.0, 3.0);
  EXPECT_EQ(v.kind, NormKind::p);
  EXPECT_NEAR(v.value, std::cbrt(0.25), 1e-12);
  EXPECT_NEAR(v.conjugate(), 1.5, 1e-15);
  EXPECT_STREQ(to_string(NormKind::one), "one");
}
