#include "obw/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "obw/error.hpp"

namespace obw {

void TauParams::validate() const {
  std::ostringstream problems;
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    problems << " interval needs finite a < b;";
  }
  if (!(x >= a && x <= b)) problems << " x must lie in [a, b];";
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    problems << " alpha and beta must be nonnegative;";
  } else if (!(alpha + beta > 0.0)) {
    problems << " alpha and beta must not both be zero;";
  }
  if (const auto msg = problems.str(); !msg.empty()) {
    throw DomainError("invalid deviation parameters:" + msg);
  }
}

void validate_against(const TauParams& params, const Weight& w,
                      const QuadConfig& cfg) {
  params.validate();
  if (params.a < w.a() || params.b > w.b()) {
    throw DomainError("[a, b] must lie inside the weight domain");
  }
  if (params.alpha > 0.0 &&
      w.is_negligible_mass(w.moment(params.a, params.x, cfg))) {
    throw DegenerateError("alpha > 0 but m(a, x) is zero: x is at the left end");
  }
  if (params.beta > 0.0 &&
      w.is_negligible_mass(w.moment(params.x, params.b, cfg))) {
    throw DegenerateError("beta > 0 but m(x, b) is zero: x is at the right end");
  }
}

PeanoKernel::PeanoKernel(const TauParams& params, Weight w, const QuadConfig& cfg)
    : params_(params), w_(std::move(w)), cfg_(cfg) {
  validate_against(params_, w_, cfg_);
  left_mass_ = w_.moment(params_.a, params_.x, cfg_);
  right_mass_ = w_.moment(params_.x, params_.b, cfg_);
}

double PeanoKernel::operator()(double t) const {
  const auto& p = params_;
  if (!(t >= p.a && t <= p.b)) {
    throw DomainError("peano_kernel: t outside [a, b]");
  }
  if (t <= p.x) {
    if (p.alpha == 0.0) return 0.0;
    return p.alpha / p.coeff_sum() * w_.moment(p.a, t, cfg_) / left_mass_;
  }
  if (p.beta == 0.0) return 0.0;
  return p.beta / p.coeff_sum() * w_.moment(p.b, t, cfg_) / right_mass_;
}

double PeanoKernel::l1() const {
  const auto abs_rho = [this](double t) { return std::abs((*this)(t)); };
  const std::array<double, 1> split{params_.x};
  return integrate(abs_rho, params_.a, params_.b, split, cfg_).value;
}

double PeanoKernel::lq(double q) const {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw DomainError("kernel_lq needs a finite q > 1");
  }
  const auto pow_rho = [this, q](double t) { return std::pow(std::abs((*this)(t)), q); };
  const std::array<double, 1> split{params_.x};
  const double total = integrate(pow_rho, params_.a, params_.b, split, cfg_).value;
  return std::pow(total, 1.0 / q);
}

double PeanoKernel::sup() const {
  const auto& p = params_;
  const double left =
      p.alpha == 0.0 ? 0.0 : p.alpha / p.coeff_sum() * left_mass_ / left_mass_;
  // Right branch limit t -> x+: |m(b, x)| / m(x, b).
  const double right =
      p.beta == 0.0 ? 0.0
                    : p.beta / p.coeff_sum() *
                          std::abs(w_.moment(p.b, p.x, cfg_)) / right_mass_;
  return std::max(left, right);
}

double peano_kernel(const TauParams& params, const Weight& w, double t,
                    const QuadConfig& cfg) {
  return PeanoKernel(params, w, cfg)(t);
}

double montgomery_kernel(double x, double t, double a, double b) {
  if (!(t >= a && t <= b)) throw DomainError("montgomery_kernel: t outside [a, b]");
  return t <= x ? t - a : t - b;
}

double kernel_l1(const TauParams& params, const Weight& w, const QuadConfig& cfg) {
  return PeanoKernel(params, w, cfg).l1();
}

double kernel_lq(const TauParams& params, const Weight& w, double q,
                 const QuadConfig& cfg) {
  return PeanoKernel(params, w, cfg).lq(q);
}

double kernel_sup(const TauParams& params, const Weight& w, const QuadConfig& cfg) {
  return PeanoKernel(params, w, cfg).sup();
}

IdentityCheck identity_check(const Fn1D& f, const TauParams& params,
                             const Weight& w, const QuadConfig& cfg) {
  const PeanoKernel rho(params, w, cfg);
  const auto& p = params;
  const auto integrand = [&](double t) {
    return rho(t) * derivative_at(f, t, p.a, p.b);
  };
  const std::array<double, 1> split{p.x};

  IdentityCheck out;
  out.kernel_side = integrate(integrand, p.a, p.b, split, cfg).value;

  double combined = 0.0;
  if (p.alpha > 0.0) {
    combined += p.alpha * weighted_integral(f, w, p.a, p.x, cfg) / rho.left_mass();
  }
  if (p.beta > 0.0) {
    combined += p.beta * weighted_integral(f, w, p.x, p.b, cfg) / rho.right_mass();
  }
  out.mean_side = f(p.x) - combined / p.coeff_sum();
  return out;
}

double identity_residual(const Fn1D& f, const TauParams& params, const Weight& w,
                         const QuadConfig& cfg) {
  return identity_check(f, params, w, cfg).residual();
}

}  // namespace obw
