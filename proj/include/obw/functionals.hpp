#pragma once

/// Deviation functionals S(f, w; c, d) and tau(x, w; alpha, beta), plus the
/// two algebraically equivalent rewritings of tau.

#include "obw/kernel.hpp"
#include "obw/quad.hpp"
#include "obw/weights.hpp"

namespace obw {

/// tau together with the pieces it was assembled from.
struct DeviationResult {
  double value = 0.0;
  double f_x = 0.0;
  double left_mean = 0.0;   // M(f, w; a, x); 0 when alpha == 0
  double right_mean = 0.0;  // M(f, w; x, b); 0 when beta == 0
  double alpha = 0.0;
  double beta = 0.0;

  /// f(x) - (alpha * left_mean + beta * right_mean) / (alpha + beta).
  double recompute() const;
};

/// S(f, w; c, d) = f(x) - M(f, w; c, d).
double deviation_S(const Fn1D& f, const Weight& w, double x, double c, double d,
                   const QuadConfig& cfg = default_quad_config());

DeviationResult tau_detail(const Fn1D& f, const Weight& w, const TauParams& params,
                           const QuadConfig& cfg = default_quad_config());

double tau(const Fn1D& f, const Weight& w, const TauParams& params,
           const QuadConfig& cfg = default_quad_config());

/// sigma_w(x) = m(a, b) / m(x, b) >= 1.
double sigma_w(const Weight& w, double a, double b, double x,
               const QuadConfig& cfg = default_quad_config());

/// tau rewritten through the full-interval mean:
///   f(x) - [(1 - beta/(alpha+beta) sigma) M(a, x) + beta/(alpha+beta) sigma M(a, b)].
double tau_decomposed(const Fn1D& f, const Weight& w, const TauParams& params,
                      const QuadConfig& cfg = default_quad_config());

/// Same rewriting with the f(x) coefficient
///   (alpha m(a, x)/(x - a) + beta m(x, b)/(b - x)) / (alpha + beta)
/// that the published form carries. Equals tau_decomposed only for constant
/// weights; reported by the audit, never asserted.
double tau_decomposed_printed(const Fn1D& f, const Weight& w,
                              const TauParams& params,
                              const QuadConfig& cfg = default_quad_config());

/// (alpha S(f, w; a, x) + beta S(f, w; x, b)) / (alpha + beta).
double tau_combination(const Fn1D& f, const Weight& w, const TauParams& params,
                       const QuadConfig& cfg = default_quad_config());

}  // namespace obw
