#include "obw/functionals.hpp"

#include <cmath>

#include "obw/error.hpp"

namespace obw {

double DeviationResult::recompute() const {
  return f_x - (alpha * left_mean + beta * right_mean) / (alpha + beta);
}

double deviation_S(const Fn1D& f, const Weight& w, double x, double c, double d,
                   const QuadConfig& cfg) {
  if (!(x >= std::min(c, d) && x <= std::max(c, d))) {
    throw DomainError("deviation_S: x must lie in [c, d]");
  }
  return f(x) - weighted_mean(f, w, c, d, cfg);
}

DeviationResult tau_detail(const Fn1D& f, const Weight& w, const TauParams& params,
                           const QuadConfig& cfg) {
  validate_against(params, w, cfg);
  DeviationResult r;
  r.alpha = params.alpha;
  r.beta = params.beta;
  r.f_x = f(params.x);
  if (params.alpha > 0.0) r.left_mean = weighted_mean(f, w, params.a, params.x, cfg);
  if (params.beta > 0.0) r.right_mean = weighted_mean(f, w, params.x, params.b, cfg);
  r.value = r.recompute();
  return r;
}

double tau(const Fn1D& f, const Weight& w, const TauParams& params,
           const QuadConfig& cfg) {
  return tau_detail(f, w, params, cfg).value;
}

double sigma_w(const Weight& w, double a, double b, double x, const QuadConfig& cfg) {
  const double right = w.moment(x, b, cfg);
  if (w.is_negligible_mass(right) || right <= 0.0) {
    throw DegenerateError("sigma_w undefined: m(x, b) is zero");
  }
  return w.moment(a, b, cfg) / right;
}

namespace {

// Bracketed term shared by both decomposed forms.
double decomposed_means(const Fn1D& f, const Weight& w, const TauParams& p,
                        const QuadConfig& cfg) {
  validate_against(p, w, cfg);
  if (p.beta == 0.0) return weighted_mean(f, w, p.a, p.x, cfg);
  const double share = p.beta / p.coeff_sum();
  const double sigma = sigma_w(w, p.a, p.b, p.x, cfg);
  const double left_coeff = 1.0 - share * sigma;
  double left = 0.0;
  // With x == a the left coefficient is 1 - sigma = 0 and the mean is
  // undefined, so the term is dropped.
  if (!w.is_negligible_mass(w.moment(p.a, p.x, cfg))) {
    left = left_coeff * weighted_mean(f, w, p.a, p.x, cfg);
  }
  return left + share * sigma * weighted_mean(f, w, p.a, p.b, cfg);
}

}  // namespace

double tau_decomposed(const Fn1D& f, const Weight& w, const TauParams& params,
                      const QuadConfig& cfg) {
  return f(params.x) - decomposed_means(f, w, params, cfg);
}

double tau_decomposed_printed(const Fn1D& f, const Weight& w,
                              const TauParams& params, const QuadConfig& cfg) {
  const auto& p = params;
  double coeff = 0.0;
  if (p.alpha > 0.0) coeff += p.alpha * w.moment(p.a, p.x, cfg) / (p.x - p.a);
  if (p.beta > 0.0) coeff += p.beta * w.moment(p.x, p.b, cfg) / (p.b - p.x);
  coeff /= p.coeff_sum();
  return coeff * f(p.x) - decomposed_means(f, w, params, cfg);
}

double tau_combination(const Fn1D& f, const Weight& w, const TauParams& params,
                       const QuadConfig& cfg) {
  const auto& p = params;
  validate_against(p, w, cfg);
  double sum = 0.0;
  if (p.alpha > 0.0) sum += p.alpha * deviation_S(f, w, p.x, p.a, p.x, cfg);
  if (p.beta > 0.0) sum += p.beta * deviation_S(f, w, p.x, p.x, p.b, cfg);
  return sum / p.coeff_sum();
}

}  // namespace obw
