#pragma once

/// The weighted Peano kernel
///
///   rho(x, t) = alpha/(alpha+beta) * m(a, t) / m(a, x)   for a <= t <= x
///             = beta/(alpha+beta)  * m(b, t) / m(x, b)   for x <  t <= b
///
/// with oriented moments, so the right branch is <= 0 for nonnegative
/// weights. Its integral against f' reproduces the deviation tau, and its
/// L1, Lq and sup norms are the sound companions of the three bound branches.

#include "obw/quad.hpp"
#include "obw/weights.hpp"

namespace obw {

/// Interval [a, b], evaluation point x and the nonnegative coefficients.
struct TauParams {
  double a = 0.0;
  double b = 1.0;
  double x = 0.5;
  double alpha = 1.0;
  double beta = 1.0;

  double coeff_sum() const { return alpha + beta; }

  /// Checks alpha, beta >= 0, alpha + beta > 0, a < b and a <= x <= b.
  void validate() const;
};

/// Params validated against a weight: [a, b] inside the weight domain and a
/// non-negligible mass on every branch whose coefficient is positive.
void validate_against(const TauParams& params, const Weight& w,
                      const QuadConfig& cfg = default_quad_config());

/// Kernel with the branch masses m(a, x) and m(x, b) computed once.
class PeanoKernel {
 public:
  PeanoKernel(const TauParams& params, Weight w,
              const QuadConfig& cfg = default_quad_config());

  double operator()(double t) const;

  const TauParams& params() const { return params_; }
  const Weight& weight() const { return w_; }
  double left_mass() const { return left_mass_; }
  double right_mass() const { return right_mass_; }

  /// Integral of |rho|, split at t = x.
  double l1() const;
  /// (integral of |rho|^q)^(1/q), q > 1.
  double lq(double q) const;
  /// sup |rho| on [a, b]: the left branch peaks at t = x and the right
  /// branch as t -> x+.
  double sup() const;

 private:
  TauParams params_;
  Weight w_;
  QuadConfig cfg_;
  double left_mass_ = 0.0;
  double right_mass_ = 0.0;
};

double peano_kernel(const TauParams& params, const Weight& w, double t,
                    const QuadConfig& cfg = default_quad_config());

/// P(x, t) = t - a on [a, x] and t - b on (x, b].
double montgomery_kernel(double x, double t, double a, double b);

double kernel_l1(const TauParams& params, const Weight& w,
                 const QuadConfig& cfg = default_quad_config());
double kernel_lq(const TauParams& params, const Weight& w, double q,
                 const QuadConfig& cfg = default_quad_config());
double kernel_sup(const TauParams& params, const Weight& w,
                  const QuadConfig& cfg = default_quad_config());

struct IdentityCheck {
  double kernel_side = 0.0;  // integral of rho * f'
  double mean_side = 0.0;    // f(x) minus the combined weighted means
  double residual() const { return kernel_side - mean_side; }
};

IdentityCheck identity_check(const Fn1D& f, const TauParams& params,
                             const Weight& w,
                             const QuadConfig& cfg = default_quad_config());

/// kernel_side - mean_side of the weighted identity.
double identity_residual(const Fn1D& f, const TauParams& params, const Weight& w,
                         const QuadConfig& cfg = default_quad_config());

}  // namespace obw
