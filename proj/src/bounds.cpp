#include "obw/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "obw/error.hpp"

namespace obw {

namespace {

struct BranchMasses {
  double left = 0.0;
  double right = 0.0;
};

BranchMasses masses(const TauParams& p, const Weight& w, const QuadConfig& cfg) {
  validate_against(p, w, cfg);
  return {w.moment(p.a, p.x, cfg), w.moment(p.x, p.b, cfg)};
}

// alpha^k (x - a)^2 / m(a, x) + beta^k (b - x)^2 / m(x, b), zero terms skipped.
double weighted_square_sum(const TauParams& p, const BranchMasses& m, double k) {
  double s = 0.0;
  if (p.alpha > 0.0) s += std::pow(p.alpha, k) * (p.x - p.a) * (p.x - p.a) / m.left;
  if (p.beta > 0.0) s += std::pow(p.beta, k) * (p.b - p.x) * (p.b - p.x) / m.right;
  return s;
}

double one_branch_factor(double alpha, double beta) {
  return 0.5 * (1.0 + std::abs(alpha - beta) / (alpha + beta));
}

}  // namespace

BoundTriple bounds_paper(const TauParams& params, const Weight& w,
                         const NormTriple& norms, const QuadConfig& cfg) {
  const auto& p = params;
  const BranchMasses m = masses(p, w, cfg);
  const double wx = w(p.x);
  const double q = norms.q();
  BoundTriple out;
  out.inf = weighted_square_sum(p, m, 1.0) * wx / (2.0 * p.coeff_sum()) * norms.inf;
  out.p = std::pow(weighted_square_sum(p, m, q) * wx, 1.0 / q) /
          (std::pow(q + 1.0, 1.0 / q) * p.coeff_sum()) * norms.p_norm;
  out.one = one_branch_factor(p.alpha, p.beta) * norms.one;
  return out;
}

BoundTriple bounds_exact(const TauParams& params, const Weight& w,
                         const NormTriple& norms, const QuadConfig& cfg) {
  const PeanoKernel rho(params, w, cfg);
  return {rho.l1() * norms.inf, rho.lq(norms.q()) * norms.p_norm,
          rho.sup() * norms.one};
}

BoundTriple bounds_cerone(double x, double alpha, double beta, double a, double b,
                          const NormTriple& norms) {
  TauParams{a, b, x, alpha, beta}.validate();
  const double q = norms.q();
  const double sum = alpha + beta;
  BoundTriple out;
  out.inf = (alpha * (x - a) + beta * (b - x)) / (2.0 * sum) * norms.inf;
  out.p = std::pow(std::pow(alpha, q) * (x - a) + std::pow(beta, q) * (b - x), 1.0 / q) /
          (sum * std::pow(q + 1.0, 1.0 / q)) * norms.p_norm;
  out.one = one_branch_factor(alpha, beta) * norms.one;
  return out;
}

BoundTriple bounds_dragomir(double x, double a, double b, const NormTriple& norms) {
  if (!(a < b) || !(x >= a && x <= b)) {
    throw DomainError("bounds_dragomir needs a < b and x in [a, b]");
  }
  const double len = b - a;
  const double off = x - 0.5 * (a + b);
  const double q = norms.q();
  BoundTriple out;
  out.inf = (0.25 * len * len + off * off) / len * norms.inf;
  out.p = std::pow((std::pow(x - a, q + 1.0) + std::pow(b - x, q + 1.0)) / (q + 1.0),
                   1.0 / q) /
          len * norms.p_norm;
  out.one = (0.5 * len + std::abs(off)) / len * norms.one;
  return out;
}

double bound_ostrowski(double x, double a, double b, double sup_norm) {
  if (!(a < b) || !(x >= a && x <= b)) {
    throw DomainError("bound_ostrowski needs a < b and x in [a, b]");
  }
  const double half = 0.5 * (b - a);
  const double off = x - 0.5 * (a + b);
  return (half * half + off * off) * sup_norm / (b - a);
}

double bound_ratio(double deviation, double bound) {
  if (bound > 0.0) return deviation / bound;
  if (deviation == 0.0) return 0.0;
  return std::numeric_limits<double>::infinity();
}

BoundSet compute_bound_set(const Fn1D& f, const Weight& w, const TauParams& params,
                           double p, const QuadConfig& cfg) {
  BoundSet s;
  s.params = params;
  s.tau = tau(f, w, params, cfg);
  s.deviation = std::abs(s.tau);
  const std::array<double, 1> split{params.x};
  s.norms = norm_triple(derivative_fn(f, params.a, params.b), params.a, params.b, p,
                        split, cfg);
  s.paper = bounds_paper(params, w, s.norms, cfg);
  s.exact = bounds_exact(params, w, s.norms, cfg);
  s.cerone = bounds_cerone(params.x, params.alpha, params.beta, params.a, params.b,
                           s.norms);
  s.dragomir = bounds_dragomir(params.x, params.a, params.b, s.norms);
  s.paper_ratio = {bound_ratio(s.deviation, s.paper.inf),
                   bound_ratio(s.deviation, s.paper.p),
                   bound_ratio(s.deviation, s.paper.one)};
  s.exact_ratio = {bound_ratio(s.deviation, s.exact.inf),
                   bound_ratio(s.deviation, s.exact.p),
                   bound_ratio(s.deviation, s.exact.one)};
  return s;
}

SplitBounds bounds_split(const Fn1D& f, const Weight& w, const TauParams& params,
                         double p, const QuadConfig& cfg) {
  const auto& tp = params;
  const BranchMasses m = masses(tp, w, cfg);
  const RealFn df = derivative_fn(f, tp.a, tp.b);
  const double wx = w(tp.x);

  NormTriple left;
  NormTriple right;
  left.p = right.p = p;
  if (tp.x > tp.a) left = norm_triple(df, tp.a, tp.x, p, {}, cfg);
  if (tp.x < tp.b) right = norm_triple(df, tp.x, tp.b, p, {}, cfg);
  const std::array<double, 1> split{tp.x};
  const NormTriple full = norm_triple(df, tp.a, tp.b, p, split, cfg);
  const double q = full.q();

  // Per-branch factors of the published split bound.
  double inf_l = 0.0, inf_r = 0.0, p_l = 0.0, p_r = 0.0;
  if (tp.alpha > 0.0) {
    const double sq = (tp.x - tp.a) * (tp.x - tp.a) / m.left;
    inf_l = 0.5 * tp.alpha * sq * wx;
    p_l = tp.alpha * std::pow(sq * wx / (q + 1.0), 1.0 / q);
  }
  if (tp.beta > 0.0) {
    const double sq = (tp.b - tp.x) * (tp.b - tp.x) / m.right;
    inf_r = 0.5 * tp.beta * sq * wx;
    p_r = tp.beta * std::pow(sq * wx / (q + 1.0), 1.0 / q);
  }

  SplitBounds out;
  out.fine.inf = inf_l * left.inf + inf_r * right.inf;
  out.fine.p = p_l * left.p_norm + p_r * right.p_norm;
  out.fine.one = tp.alpha * left.one + tp.beta * right.one;
  out.coarse.inf = (inf_l + inf_r) * full.inf;
  out.coarse.p = (p_l + p_r) * full.p_norm;
  out.coarse.one = tp.coeff_sum() * full.one;
  return out;
}

const char* to_string(CorollaryMode mode) {
  switch (mode) {
    case CorollaryMode::equal_coeffs:
      return "equal_coeffs";
    case CorollaryMode::midpoint:
      return "midpoint";
    case CorollaryMode::midpoint_equal:
      return "midpoint_equal";
  }
  return "?";
}

CorollaryResult corollary_bounds(CorollaryMode mode, const Fn1D& f, const Weight& w,
                                 double a, double b, double p, double x, double alpha,
                                 double beta, const QuadConfig& cfg) {
  const double mid = 0.5 * (a + b);
  CorollaryResult r;
  switch (mode) {
    case CorollaryMode::equal_coeffs:
      r.params = {a, b, x, 1.0, 1.0};
      break;
    case CorollaryMode::midpoint:
      r.params = {a, b, mid, alpha, beta};
      break;
    case CorollaryMode::midpoint_equal:
      r.params = {a, b, mid, 1.0, 1.0};
      break;
  }
  const TauParams& tp = r.params;
  const std::array<double, 1> split{tp.x};
  const NormTriple norms =
      norm_triple(derivative_fn(f, a, b), a, b, p, split, cfg);
  const double q = norms.q();
  const BranchMasses m = masses(tp, w, cfg);
  const double wx = w(tp.x);
  const double root_q1 = std::pow(q + 1.0, 1.0 / q);

  r.lhs = std::abs(tau(f, w, tp, cfg));
  switch (mode) {
    case CorollaryMode::equal_coeffs: {
      const double bracket = (x - a) * (x - a) / m.left + (b - x) * (b - x) / m.right;
      r.bounds.inf = bracket * wx * norms.inf / 4.0;
      r.bounds.p = std::pow(bracket * wx, 1.0 / q) * norms.p_norm / (2.0 * root_q1);
      r.bounds.one = norms.one / 2.0;
      break;
    }
    case CorollaryMode::midpoint: {
      const double h2 = 0.25 * (b - a) * (b - a);
      double lin = 0.0, pw = 0.0;
      if (alpha > 0.0) {
        lin += alpha * h2 / m.left;
        pw += std::pow(alpha, q) * h2 / m.left;
      }
      if (beta > 0.0) {
        lin += beta * h2 / m.right;
        pw += std::pow(beta, q) * h2 / m.right;
      }
      r.bounds.inf = lin * wx * norms.inf / (2.0 * (alpha + beta));
      r.bounds.p = std::pow(pw * wx, 1.0 / q) * norms.p_norm / (root_q1 * (alpha + beta));
      r.bounds.one = one_branch_factor(alpha, beta) * norms.one;
      break;
    }
    case CorollaryMode::midpoint_equal: {
      const double h2 = 0.25 * (b - a) * (b - a);
      const double bracket = h2 / m.left + h2 / m.right;
      r.bounds.inf = bracket * wx * norms.inf / 4.0;
      r.bounds.p = std::pow(bracket * wx, 1.0 / q) * norms.p_norm / (2.0 * root_q1);
      r.bounds.one = norms.one / 2.0;
      r.printed_lhs = std::abs(f(mid) - 0.5 * weighted_mean(f, w, a, b, cfg));
      break;
    }
  }
  return r;
}

Fn1D sign_kernel_witness(const TauParams& params) {
  params.validate();
  const double a = params.a;
  const double x = params.x;
  const double up = params.alpha > 0.0 ? 1.0 : 0.0;
  const double down = params.beta > 0.0 ? 1.0 : 0.0;
  auto value = [=](double t) { return up * (std::min(t, x) - a) - down * std::max(t - x, 0.0); };
  auto slope = [=](double t) { return t <= x ? up : -down; };
  return make_fn("sign-kernel", value, RealFn(slope));
}

Fn1D spike_witness(const TauParams& params, double width) {
  params.validate();
  const double x = params.x;
  if (params.alpha >= params.beta) {
    const double lo = x - width;
    if (lo < params.a) throw DomainError("spike witness does not fit left of x");
    auto value = [=](double t) { return std::clamp((t - lo) / width, 0.0, 1.0); };
    auto slope = [=](double t) { return t > lo && t <= x ? 1.0 / width : 0.0; };
    return make_fn("spike", value, RealFn(slope));
  }
  const double hi = x + width;
  if (hi > params.b) throw DomainError("spike witness does not fit right of x");
  auto value = [=](double t) { return -std::clamp((t - x) / width, 0.0, 1.0); };
  auto slope = [=](double t) { return t > x && t < hi ? -1.0 / width : 0.0; };
  return make_fn("spike", value, RealFn(slope));
}

SharpnessReport sharpness_search(const Weight& w, const std::vector<double>& xs,
                                 const std::vector<Coefficients>& coeffs,
                                 SharpnessKind kind, const QuadConfig& cfg) {
  if (xs.empty() || coeffs.empty()) throw DomainError("sharpness grid is empty");
  SharpnessReport rep;
  rep.weight_name = w.name();
  rep.kind = kind;
  const double a = w.a();
  const double b = w.b();
  const double spike_width = 1e-4 * (b - a);
  bool have_best = false;

  for (double x : xs) {
    for (const auto& c : coeffs) {
      const TauParams tp{a, b, x, c.alpha, c.beta};
      const PeanoKernel rho(tp, w, cfg);
      SharpnessRow row{x, c.alpha, c.beta};
      if (kind == SharpnessKind::exact_inf) {
        const Fn1D f = sign_kernel_witness(tp);
        row.deviation = std::abs(tau(f, w, tp, cfg));
        row.bound = rho.l1() * norm_inf(*f.derivative, a, b);
      } else {
        const Fn1D f = spike_witness(tp, spike_width);
        const std::array<double, 3> edges{x - spike_width, x, x + spike_width};
        row.deviation = std::abs(tau(f, w, tp, cfg));
        row.bound = rho.sup() * norm_p(*f.derivative, 1.0, a, b, edges, cfg);
      }
      row.degenerate = !(row.bound > 0.0);
      row.ratio = row.degenerate ? 0.0 : row.deviation / row.bound;
      rep.rows.push_back(row);
      if (row.degenerate) continue;
      const bool better = !have_best || row.ratio > rep.best.ratio ||
                          (row.ratio == rep.best.ratio && row.x < rep.best.x);
      if (better) {
        rep.best = row;
        have_best = true;
      }
    }
  }
  return rep;
}

std::vector<AuditRow> audit_paper_vs_exact(const std::vector<Weight>& weights,
                                           const std::vector<double>& xs,
                                           const std::vector<Coefficients>& coeffs,
                                           const QuadConfig& cfg) {
  if (weights.empty() || xs.empty() || coeffs.empty()) {
    throw DomainError("audit grids must be nonempty");
  }
  NormTriple unit;
  unit.inf = 1.0;
  unit.p_norm = 1.0;
  unit.one = 1.0;

  std::vector<AuditRow> rows;
  for (const auto& w : weights) {
    for (double x : xs) {
      for (const auto& c : coeffs) {
        const TauParams tp{w.a(), w.b(), x, c.alpha, c.beta};
        AuditRow row{w.name(), x, c.alpha, c.beta};
        row.paper_inf_factor = bounds_paper(tp, w, unit, cfg).inf;
        row.exact_inf_factor = kernel_l1(tp, w, cfg);
        row.ratio = row.paper_inf_factor / row.exact_inf_factor;
        row.flagged = row.ratio < 1.0 - 1e-9;
        if (row.flagged) {
          row.witness_deviation = std::abs(tau(sign_kernel_witness(tp), w, tp, cfg));
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace obw
