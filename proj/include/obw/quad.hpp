#pragma once

/// Adaptive Gauss-Kronrod integration and the weighted integral means built
/// on top of it.
///
/// All integrals are oriented: integrate(g, c, d) == -integrate(g, d, c).

#include <functional>
#include <optional>
#include <span>
#include <string>

namespace obw {

class Weight;

using RealFn = std::function<double(double)>;

/// Scalar function of one variable with optional closed forms. The closed
/// forms are used by the norm module and by oracle checks; when the
/// derivative is missing a central difference is used instead.
struct Fn1D {
  std::string name;
  RealFn value;
  std::optional<RealFn> derivative;
  std::optional<RealFn> antiderivative;

  double operator()(double t) const { return value(t); }
};

/// Builds an Fn1D from its parts.
Fn1D make_fn(std::string name, RealFn value,
             std::optional<RealFn> derivative = std::nullopt,
             std::optional<RealFn> antiderivative = std::nullopt);

/// Constant function t -> k with derivative 0.
Fn1D constant_fn(double k);

/// f'(t) from the closed form when present, otherwise a central difference
/// with step eps^(1/3) * max(1, |t|). Near lo or hi the difference becomes
/// one-sided so that no evaluation leaves [lo, hi].
double derivative_at(const Fn1D& f, double t, double lo, double hi);

/// Evaluator for f' on [lo, hi] following derivative_at.
RealFn derivative_fn(const Fn1D& f, double lo, double hi);

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;

  /// Throws DomainError when abs_tol <= 0, rel_tol < 0 or
  /// max_subdivisions < 1.
  void validate() const;
};

/// Default configuration; OBW_TOL in the environment overrides abs_tol.
QuadConfig default_quad_config();

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

/// Globally adaptive G7/K15 integration of g over [c, d]. The interval with
/// the largest local error is bisected until the summed error estimate is
/// below max(abs_tol, rel_tol * |value|). Endpoints are never evaluated, so
/// integrable endpoint singularities are allowed.
QuadResult integrate(const RealFn& g, double c, double d,
                     const QuadConfig& cfg = default_quad_config());

/// As integrate, with the range split at every breakpoint strictly inside
/// (c, d) so that known jumps or kinks fall on panel edges.
QuadResult integrate(const RealFn& g, double c, double d,
                     std::span<const double> breakpoints,
                     const QuadConfig& cfg = default_quad_config());

/// Algebraic endpoint behaviour (t - c)^left near c and (d - t)^right near d.
/// Negative exponents (> -1) trigger a power substitution on the half
/// adjacent to that endpoint which removes the singularity.
struct EndpointPowers {
  double left = 0.0;
  double right = 0.0;
};

QuadResult integrate_singular(const RealFn& g, double c, double d,
                              EndpointPowers powers,
                              const QuadConfig& cfg = default_quad_config());

/// N(c, d) = integral of f * w over [c, d], oriented.
double weighted_integral(const Fn1D& f, const Weight& w, double c, double d,
                         const QuadConfig& cfg = default_quad_config());

/// M(f, w; c, d) = N(c, d) / m(c, d). Throws DegenerateError when
/// m(c, d) < 1e-13 * m(a, b).
double weighted_mean(const Fn1D& f, const Weight& w, double c, double d,
                     const QuadConfig& cfg = default_quad_config());

/// M(f; c, d) = (1 / (d - c)) * integral of f over [c, d].
double unweighted_mean(const Fn1D& f, double c, double d,
                       const QuadConfig& cfg = default_quad_config());

}  // namespace obw
