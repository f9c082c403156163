#pragma once

/// Lebesgue norms of f' on a subinterval.

#include <span>

#include "obw/quad.hpp"

namespace obw {

enum class NormKind { inf, p, one };

const char* to_string(NormKind kind);

struct NormValue {
  NormKind kind = NormKind::inf;
  double exponent = 0.0;  // only meaningful for NormKind::p
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  /// Conjugate exponent p / (p - 1) of a p-norm.
  double conjugate() const { return exponent / (exponent - 1.0); }
};

/// The three norms ||f'||_inf, ||f'||_p and ||f'||_1 used by every bound.
struct NormTriple {
  double inf = 0.0;
  double p_norm = 0.0;
  double one = 0.0;
  double p = 2.0;

  double q() const { return p / (p - 1.0); }
};

/// Supremum estimate of |g| on [c, d]: 1024 Chebyshev points, then
/// golden-section refinement of the 8 best brackets down to 1e-12 in t.
/// The result is never below the largest sampled value. This is an
/// estimate, not a certificate.
double norm_inf(const RealFn& g, double c, double d);

/// (integral of |g|^p over [c, d])^(1/p), p >= 1 finite. Breakpoints mark
/// known discontinuities of g.
double norm_p(const RealFn& g, double p, double c, double d,
              std::span<const double> breakpoints = {},
              const QuadConfig& cfg = default_quad_config());

NormValue make_norm(NormKind kind, const RealFn& g, double c, double d,
                    double p = 2.0, const QuadConfig& cfg = default_quad_config());

/// All three norms of g on [c, d].
NormTriple norm_triple(const RealFn& g, double c, double d, double p,
                       std::span<const double> breakpoints = {},
                       const QuadConfig& cfg = default_quad_config());

}  // namespace obw
