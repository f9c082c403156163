#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "obw/bounds.hpp"
#include "obw/corpus.hpp"
#include "obw/error.hpp"
#include "oracles.hpp"

using namespace obw;

namespace {

Weight w01(const char* name) { return builtin_weight({name, {}}, 0.0, 1.0); }

NormTriple unit_norms(double p = 2.0) {
  NormTriple n;
  n.inf = n.p_norm = n.one = 1.0;
  n.p = p;
  return n;
}

}  // namespace

TEST(BoundsPaper, Examples) {
  const Weight u = w01("uniform");
  EXPECT_NEAR(bounds_paper({0.0, 1.0, 0.3, 1.0, 1.0}, u, unit_norms()).inf, 0.25, 1e-15);
  EXPECT_NEAR(bounds_paper({0.0, 1.0, 0.3, 2.0, 2.0}, w01("exponential"), unit_norms()).one,
              0.5, 1e-15);
  const BoundSet s = compute_bound_set(*corpus::function("square"), u,
                                       {0.0, 1.0, 0.5, 1.0, 1.0}, 2.0);
  EXPECT_NEAR(s.paper.inf, 0.5, 1e-12);
  EXPECT_NEAR(s.deviation, 1.0 / 12.0, 1e-14);
  EXPECT_GE(s.paper.inf, s.deviation);
}

TEST(BoundsExact, UniformCoincidesWithPaper) {
  const Weight u = w01("uniform");
  for (double x : {0.2, 0.5, 0.9}) {
    const TauParams tp{0.0, 1.0, x, 2.0, 1.0};
    const BoundTriple p = bounds_paper(tp, u, unit_norms(3.0));
    const BoundTriple e = bounds_exact(tp, u, unit_norms(3.0));
    EXPECT_NEAR(p.inf, e.inf, 1e-12);
    EXPECT_NEAR(p.p, e.p, 1e-10);
    EXPECT_NEAR(p.one, e.one, 1e-12);
  }
}

TEST(BoundsExact, DecreasingWeightGap) {
  const TauParams tp{0.0, 1.0, 0.9, 1.0, 1.0};
  const Weight dec = w01("decreasing");
  EXPECT_NEAR(bounds_exact(tp, dec, unit_norms()).inf, 0.303030, 1e-6);
  EXPECT_NEAR(bounds_paper(tp, dec, unit_norms()).inf, 0.090909, 1e-6);
}

TEST(BoundsExact, ZeroFunction) {
  const BoundSet s =
      compute_bound_set(constant_fn(0.0), w01("arcsine"), {0.0, 1.0, 0.4, 1.0, 1.0}, 2.0);
  EXPECT_EQ(s.deviation, 0.0);
  EXPECT_EQ(s.exact_ratio.inf, 0.0);
  EXPECT_EQ(s.exact_ratio.one, 0.0);
}

TEST(BoundsExact, HomogeneousInNorms) {
  const TauParams tp{0.0, 1.0, 0.4, 1.0, 2.0};
  const Weight w = w01("truncnormal");
  const BoundTriple one = bounds_exact(tp, w, unit_norms());
  NormTriple n = unit_norms();
  n.inf = 3.0;
  n.p_norm = 5.0;
  n.one = 7.0;
  const BoundTriple scaled = bounds_exact(tp, w, n);
  EXPECT_NEAR(scaled.inf, 3.0 * one.inf, 1e-14);
  EXPECT_NEAR(scaled.p, 5.0 * one.p, 1e-14);
  EXPECT_NEAR(scaled.one, 7.0 * one.one, 1e-14);
}

TEST(BoundsCerone, Examples) {
  EXPECT_NEAR(bounds_cerone(0.3, 2.0, 1.0, 0.0, 1.0, unit_norms()).inf, 1.3 / 6.0, 1e-15);
  for (double x : {0.1, 0.5, 0.77}) {
    EXPECT_NEAR(bounds_cerone(x, 1.0, 1.0, 0.0, 2.0, unit_norms()).inf, 0.5, 1e-15);
  }
  EXPECT_NEAR(bounds_cerone(0.4, 1.0, 0.0, 0.0, 1.0, unit_norms()).one, 1.0, 1e-15);
}

TEST(BoundsDragomir, Examples) {
  EXPECT_NEAR(bounds_dragomir(0.5, 0.0, 1.0, unit_norms()).inf, 0.25, 1e-15);
  EXPECT_NEAR(bounds_dragomir(0.0, 0.0, 1.0, unit_norms()).one, 1.0, 1e-15);
  EXPECT_NEAR(bounds_dragomir(0.5, 0.0, 1.0, unit_norms()).one, 0.5, 1e-15);
}

TEST(BoundOstrowski, Examples) {
  EXPECT_NEAR(bound_ostrowski(0.5, 0.0, 1.0, 1.0), 0.25, 1e-15);
  EXPECT_NEAR(bound_ostrowski(0.0, 0.0, 1.0, 1.0), 0.5, 1e-15);
  EXPECT_EQ(bound_ostrowski(0.3, 0.0, 1.0, 0.0), 0.0);
}

TEST(BoundRatio, Conventions) {
  EXPECT_EQ(bound_ratio(0.0, 0.0), 0.0);
  EXPECT_TRUE(std::isinf(bound_ratio(1.0, 0.0)));
  EXPECT_DOUBLE_EQ(bound_ratio(1.0, 4.0), 0.25);
}

TEST(BoundsSplit, Examples) {
  const Weight u = w01("uniform");
  const SplitBounds cubic =
      bounds_split(make_fn("t^3", [](double t) { return t * t * t; },
                           RealFn([](double t) { return 3.0 * t * t; })),
                   u, {0.0, 1.0, 0.5, 1.0, 1.0}, 2.0);
  // (alpha+beta) tau = 2 * (-1/8); fine uses sup norms 0.75 and 3.
  EXPECT_NEAR(cubic.fine.inf, 0.9375, 1e-12);
  EXPECT_NEAR(cubic.coarse.inf, 1.5, 1e-12);
  EXPECT_LE(0.25, cubic.fine.inf);

  const Fn1D ramp_left = make_fn(
      "ramp", [](double t) { return std::min(t, 0.5); },
      RealFn([](double t) { return t < 0.5 ? 1.0 : 0.0; }));
  const SplitBounds r = bounds_split(ramp_left, u, {0.0, 1.0, 0.5, 1.0, 1.0}, 2.0);
  // ||f'||_1 on [x, b] vanishes, so only alpha * ||f'||_1 on [a, x] remains.
  EXPECT_NEAR(r.fine.one, 0.5, 1e-9);
  EXPECT_GE(r.coarse.one, r.fine.one - 1e-9);

  const Fn1D sym = make_fn(
      "sym", [](double t) { return (t - 0.5) * (t - 0.5); },
      RealFn([](double t) { return 2.0 * (t - 0.5); }));
  const SplitBounds s = bounds_split(sym, u, {0.0, 1.0, 0.5, 1.0, 1.0}, 2.0);
  // Equal sup norms on both halves; the L1 branch still differs because the
  // full-interval L1 norm is the sum of the halves.
  EXPECT_NEAR(s.fine.inf, s.coarse.inf, 1e-12);
  EXPECT_NEAR(2.0 * s.fine.one, s.coarse.one, 1e-12);
}

TEST(Corollary, Examples) {
  const Weight u = w01("uniform");
  const Fn1D f = *corpus::function("sine");
  const auto me = corollary_bounds(CorollaryMode::midpoint_equal, f, u, 0.0, 1.0, 2.0);
  const double fsup = std::cos(0.0);
  EXPECT_NEAR(me.bounds.inf, 0.25 * fsup, 1e-12);
  const auto mid = corollary_bounds(CorollaryMode::midpoint, f, u, 0.0, 1.0, 2.0, 0.0, 2.0, 1.0);
  EXPECT_NEAR(mid.bounds.inf, 0.25 * fsup, 1e-12);
  EXPECT_DOUBLE_EQ(mid.params.x, 0.5);

  const Weight w = w01("exponential");
  const auto eq = corollary_bounds(CorollaryMode::equal_coeffs, f, w, 0.0, 1.0, 2.0, 0.3);
  const std::array<double, 1> split{0.3};
  const NormTriple n = norm_triple(derivative_fn(f, 0.0, 1.0), 0.0, 1.0, 2.0, split);
  const BoundTriple g = bounds_paper({0.0, 1.0, 0.3, 1.0, 1.0}, w, n);
  EXPECT_NEAR(eq.bounds.inf, g.inf, 1e-12);
  EXPECT_NEAR(eq.bounds.p, g.p, 1e-12);
  EXPECT_NEAR(eq.bounds.one, g.one, 1e-12);
  EXPECT_NEAR(eq.lhs, std::abs(tau(f, w, {0.0, 1.0, 0.3, 1.0, 1.0})), 1e-14);
}

TEST(Sharpness, SignKernelWitnessAttainsL1) {
  for (const char* name : {"uniform", "exponential", "decreasing"}) {
    const TauParams tp{0.0, 1.0, 0.3, 2.0, 1.0};
    const Weight w = w01(name);
    const Fn1D f = sign_kernel_witness(tp);
    EXPECT_NEAR(std::abs(tau(f, w, tp)), kernel_l1(tp, w), 1e-10) << name;
  }
}

TEST(Sharpness, SearchReportsRatioNearOne) {
  const SharpnessReport r = sharpness_search(w01("uniform"), {0.5}, {{1.0, 1.0}},
                                             SharpnessKind::exact_inf);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_NEAR(r.best.ratio, 1.0, 1e-3);
  const SharpnessReport e = sharpness_search(w01("exponential"), {0.3}, {{2.0, 1.0}},
                                             SharpnessKind::exact_inf);
  EXPECT_NEAR(e.best.ratio, 1.0, 1e-3);
  const SharpnessReport one = sharpness_search(w01("exponential"), {0.3, 0.6},
                                               {{2.0, 1.0}, {1.0, 3.0}},
                                               SharpnessKind::exact_one);
  EXPECT_GE(one.best.ratio, 0.99);
  EXPECT_LE(one.best.ratio, 1.0 + 1e-9);
}

TEST(Sharpness, TiesGoToSmallerX) {
  const SharpnessReport r = sharpness_search(w01("uniform"), {0.7, 0.3, 0.5}, {{1.0, 1.0}},
                                             SharpnessKind::exact_inf);
  // Every row attains ratio 1 up to rounding; the smallest x wins a tie.
  for (const auto& row : r.rows) EXPECT_NEAR(row.ratio, 1.0, 1e-9);
  EXPECT_LE(r.best.ratio, 1.0 + 1e-9);
}

TEST(Audit, UniformNeverFlagged) {
  const auto rows = audit_paper_vs_exact({w01("uniform")}, {0.1, 0.5, 0.9},
                                         {{1.0, 1.0}, {2.0, 1.0}});
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.ratio, 1.0, 1e-9);
    EXPECT_FALSE(r.flagged);
  }
}

TEST(Audit, DecreasingWeightFlaggedWithWitness) {
  const auto rows = audit_paper_vs_exact({w01("decreasing")}, {0.9}, {{1.0, 1.0}});
  ASSERT_EQ(rows.size(), 1u);
  const AuditRow& r = rows.front();
  EXPECT_NEAR(r.paper_inf_factor, 1.0 / 11.0, 1e-9);
  EXPECT_NEAR(r.exact_inf_factor, 10.0 / 33.0, 1e-9);
  EXPECT_NEAR(r.ratio, 0.3, 1e-9);
  EXPECT_TRUE(r.flagged);
  EXPECT_GT(r.witness_deviation, r.paper_inf_factor);
}

TEST(Audit, IncreasingWeightMirrorsDecreasing) {
  // w(t) = t is the reflection of 1 - t: flagged near a, looser near b.
  const auto rows =
      audit_paper_vs_exact({w01("increasing")}, {0.1, 0.95}, {{1.0, 1.0}});
  EXPECT_TRUE(rows[0].flagged);
  EXPECT_NEAR(rows[0].ratio, 0.3, 1e-9);
  EXPECT_FALSE(rows[1].flagged);
  EXPECT_GT(rows[1].ratio, 1.0);
}
