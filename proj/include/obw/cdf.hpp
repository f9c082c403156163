#pragma once

/// Weighted cumulative distribution F_w(x) = integral of f w over [a, x] and
/// its approximation through the point value f(x), with the deviation bounds
/// transported to the distribution function.

#include "obw/bounds.hpp"

namespace obw {

/// Density f with weight w on [a, b] such that the integral of f w is 1.
class DensityModel {
 public:
  /// Throws DomainError when f is negative at a sampled point or the total
  /// mass differs from 1 by more than 1e-8.
  DensityModel(Fn1D density, Weight weight,
               const QuadConfig& cfg = default_quad_config());

  /// Rescales `density` so that the integral of density * weight is 1.
  static DensityModel normalized(Fn1D density, Weight weight,
                                 const QuadConfig& cfg = default_quad_config());

  const Fn1D& density() const { return density_; }
  const Weight& weight() const { return weight_; }
  double a() const { return weight_.a(); }
  double b() const { return weight_.b(); }

 private:
  Fn1D density_;
  Weight weight_;
};

double cdf_value(const DensityModel& model, double x,
                 const QuadConfig& cfg = default_quad_config());

/// R_w(x) = 1 - F_w(x).
double reliability(const DensityModel& model, double x,
                   const QuadConfig& cfg = default_quad_config());

struct CdfBound {
  TauParams params;
  double cdf = 0.0;
  double lhs = 0.0;
  double tau = 0.0;
  /// lhs minus the scaled |tau| it must equal algebraically.
  double identity_residual = 0.0;
  BoundTriple bounds;        // published right-hand sides
  BoundTriple exact_bounds;  // kernel-norm companions with the same scaling
  NormTriple norms;          // norms of f' on [a, b]
};

/// |(alpha m(x,b) - beta m(a,x)) F_w(x) - m(a,x) [(alpha+beta) m(x,b) f(x) - beta]|
/// which equals (alpha+beta) m(a,x) m(x,b) |tau|; bounds are that factor
/// times the weighted deviation bounds.
CdfBound cdf_bound_general(const DensityModel& model, const TauParams& params,
                           double p, const QuadConfig& cfg = default_quad_config());

/// alpha = beta = 1/2.
CdfBound cdf_bound_symmetric(const DensityModel& model, double x, double p,
                             const QuadConfig& cfg = default_quad_config());

/// beta = 0 scaled by m(a, x): lhs = |m(a, x) f(x) - F_w(x)|. `printed_lhs`
/// holds |f(x) m(a, x)/(x - a) - F_w(x)| for comparison.
struct CdfLeftBound {
  CdfBound bound;
  double printed_lhs = 0.0;
};

CdfLeftBound cdf_bound_left(const DensityModel& model, double x, double p,
                            const QuadConfig& cfg = default_quad_config());

/// Integral of F_w over [a, b] minus (b - E[X w(X)]).
double expectation_identity_check(const DensityModel& model,
                                  const QuadConfig& cfg = default_quad_config());

/// ||f w||_inf on [a, b]: the norm that replaces ||f'|| when the bounds are
/// applied to F_w itself.
double cdf_derivative_sup(const DensityModel& model);

}  // namespace obw
