#pragma once

/// Right-hand sides of the deviation inequalities.
///
/// Two families are kept apart throughout:
///   * "paper" forms: the closed expressions with the w(x) factor, exactly as
///     published, including the legacy unweighted results they generalise;
///   * "exact" forms: Hoelder bounds built from the kernel norms, which are
///     guaranteed to dominate |tau| for every admissible weight.
/// The two coincide for constant weights. The audit quantifies where they
/// differ.

#include <string>
#include <vector>

#include "obw/functionals.hpp"
#include "obw/kernel.hpp"
#include "obw/norms.hpp"

namespace obw {

/// One value per norm branch: ||f'||_inf, ||f'||_p and ||f'||_1.
struct BoundTriple {
  double inf = 0.0;
  double p = 0.0;
  double one = 0.0;

  BoundTriple scaled(double s) const { return {inf * s, p * s, one * s}; }
};

struct BoundSet {
  TauParams params;
  double tau = 0.0;        // signed deviation
  double deviation = 0.0;  // |tau|
  NormTriple norms;        // f' norms on [a, b]
  BoundTriple paper;
  BoundTriple exact;
  BoundTriple cerone;    // unweighted legacy form at the same (x, alpha, beta)
  BoundTriple dragomir;  // legacy bound on |f(x) - M(f; a, b)|
  BoundTriple paper_ratio;
  BoundTriple exact_ratio;
};

/// Published weighted bounds. Zero-coefficient terms are omitted.
BoundTriple bounds_paper(const TauParams& params, const Weight& w,
                         const NormTriple& norms,
                         const QuadConfig& cfg = default_quad_config());

/// kernel_l1 * ||f'||_inf, kernel_lq(q) * ||f'||_p, kernel_sup * ||f'||_1.
BoundTriple bounds_exact(const TauParams& params, const Weight& w,
                         const NormTriple& norms,
                         const QuadConfig& cfg = default_quad_config());

/// Unweighted bounds on |tau(x; alpha, beta)|.
BoundTriple bounds_cerone(double x, double alpha, double beta, double a, double b,
                          const NormTriple& norms);

/// Unweighted bounds on |f(x) - M(f; a, b)|.
BoundTriple bounds_dragomir(double x, double a, double b, const NormTriple& norms);

/// [((b - a)/2)^2 + (x - (a + b)/2)^2] * sup_norm / (b - a).
double bound_ostrowski(double x, double a, double b, double sup_norm);

/// deviation / bound, with 0/0 read as 0 and d/0 as +infinity.
double bound_ratio(double deviation, double bound);

/// tau, the f' norms on [a, b] (split at x) and every bound family.
BoundSet compute_bound_set(const Fn1D& f, const Weight& w, const TauParams& params,
                           double p, const QuadConfig& cfg = default_quad_config());

/// Bounds on |(alpha + beta) tau| after the triangle inequality: `fine` uses
/// f' norms on [a, x] and [x, b], `coarse` the norms on [a, b].
struct SplitBounds {
  BoundTriple fine;
  BoundTriple coarse;
};

SplitBounds bounds_split(const Fn1D& f, const Weight& w, const TauParams& params,
                         double p, const QuadConfig& cfg = default_quad_config());

enum class CorollaryMode { equal_coeffs, midpoint, midpoint_equal };

const char* to_string(CorollaryMode mode);

struct CorollaryResult {
  TauParams params;        // the substituted (x, alpha, beta)
  double lhs = 0.0;        // |tau| under the substitution
  double printed_lhs = 0.0;  // midpoint_equal only: |f(mid) - M(f, w; a, b) / 2|
  BoundTriple bounds;
};

/// equal_coeffs: alpha = beta = 1 at the given x.
/// midpoint: x = (a + b) / 2 with the given alpha, beta.
/// midpoint_equal: both substitutions.
CorollaryResult corollary_bounds(CorollaryMode mode, const Fn1D& f, const Weight& w,
                                 double a, double b, double p, double x = 0.0,
                                 double alpha = 1.0, double beta = 1.0,
                                 const QuadConfig& cfg = default_quad_config());

/// Piecewise-linear f with f'(t) = sign(rho(x, t)). It turns the L_inf
/// Hoelder step into an equality, so |tau| == kernel_l1.
Fn1D sign_kernel_witness(const TauParams& params);

/// f' = spike of unit mass and width `width` next to x on the side of the
/// larger coefficient. |tau| approaches kernel_sup as the width shrinks.
Fn1D spike_witness(const TauParams& params, double width);

enum class SharpnessKind { exact_inf, exact_one };

struct SharpnessRow {
  double x = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double deviation = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool degenerate = false;  // bound == 0, excluded from the maximum
};

struct SharpnessReport {
  std::string weight_name;
  SharpnessKind kind = SharpnessKind::exact_inf;
  std::vector<SharpnessRow> rows;
  SharpnessRow best;
};

struct Coefficients {
  double alpha = 1.0;
  double beta = 1.0;
};

/// Evaluates the extremal witness for every (x, coefficient) pair on the
/// weight's own domain. Ties in ratio go to the smaller x.
SharpnessReport sharpness_search(const Weight& w, const std::vector<double>& xs,
                                 const std::vector<Coefficients>& coeffs,
                                 SharpnessKind kind,
                                 const QuadConfig& cfg = default_quad_config());

struct AuditRow {
  std::string weight_name;
  double x = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double paper_inf_factor = 0.0;  // published L_inf bound with ||f'||_inf = 1
  double exact_inf_factor = 0.0;  // kernel_l1
  double ratio = 0.0;             // paper / exact
  bool flagged = false;           // published bound below the sound one
  double witness_deviation = 0.0; // |tau| of the sign-kernel witness, if flagged
};

/// Row order: weights as given, then x, then coefficients.
std::vector<AuditRow> audit_paper_vs_exact(const std::vector<Weight>& weights,
                                           const std::vector<double>& xs,
                                           const std::vector<Coefficients>& coeffs,
                                           const QuadConfig& cfg = default_quad_config());

}  // namespace obw
