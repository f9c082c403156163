#include "obw/cdf.hpp"

#include <array>
#include <cmath>

#include "obw/error.hpp"

namespace obw {

namespace {

double total_mass(const Fn1D& f, const Weight& w, const QuadConfig& cfg) {
  return weighted_integral(f, w, w.a(), w.b(), cfg);
}

NormTriple density_norms(const DensityModel& model, double x, double p,
                         const QuadConfig& cfg) {
  const std::array<double, 1> split{x};
  return norm_triple(derivative_fn(model.density(), model.a(), model.b()), model.a(),
                     model.b(), p, split, cfg);
}

}  // namespace

DensityModel::DensityModel(Fn1D density, Weight weight, const QuadConfig& cfg)
    : density_(std::move(density)), weight_(std::move(weight)) {
  constexpr int kProbes = 64;
  for (int i = 1; i < kProbes; ++i) {
    const double t = a() + (b() - a()) * i / kProbes;
    if (!(density_(t) >= 0.0)) {
      throw DomainError("density '" + density_.name + "' is negative at t = " +
                        std::to_string(t));
    }
  }
  const double mass = total_mass(density_, weight_, cfg);
  if (!(std::abs(mass - 1.0) <= 1e-8)) {
    throw DomainError("density '" + density_.name + "' with weight '" + weight_.name() +
                      "' has total mass " + std::to_string(mass) + ", expected 1");
  }
}

DensityModel DensityModel::normalized(Fn1D density, Weight weight,
                                      const QuadConfig& cfg) {
  const double mass = total_mass(density, weight, cfg);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("density '" + density.name + "' has no positive mass");
  }
  const double s = 1.0 / mass;
  Fn1D scaled;
  scaled.name = density.name;
  scaled.value = [v = density.value, s](double t) { return s * v(t); };
  if (density.derivative) {
    scaled.derivative = [d = *density.derivative, s](double t) { return s * d(t); };
  }
  if (density.antiderivative) {
    scaled.antiderivative = [g = *density.antiderivative, s](double t) { return s * g(t); };
  }
  return DensityModel(std::move(scaled), std::move(weight), cfg);
}

double cdf_value(const DensityModel& model, double x, const QuadConfig& cfg) {
  if (!(x >= model.a() && x <= model.b())) {
    throw DomainError("cdf_value: x outside [a, b]");
  }
  return weighted_integral(model.density(), model.weight(), model.a(), x, cfg);
}

double reliability(const DensityModel& model, double x, const QuadConfig& cfg) {
  return 1.0 - cdf_value(model, x, cfg);
}

CdfBound cdf_bound_general(const DensityModel& model, const TauParams& params,
                           double p, const QuadConfig& cfg) {
  const Weight& w = model.weight();
  const Fn1D& f = model.density();
  const auto& tp = params;
  validate_against(tp, w, cfg);
  if (tp.a != model.a() || tp.b != model.b()) {
    throw DomainError("cdf bounds need params on the model interval");
  }

  CdfBound out;
  out.params = tp;
  const double ml = w.moment(tp.a, tp.x, cfg);
  const double mr = w.moment(tp.x, tp.b, cfg);
  const double fx = f(tp.x);
  out.cdf = cdf_value(model, tp.x, cfg);
  out.lhs = std::abs((tp.alpha * mr - tp.beta * ml) * out.cdf -
                     ml * (tp.coeff_sum() * mr * fx - tp.beta));
  out.tau = tau(f, w, tp, cfg);
  const double scale = tp.coeff_sum() * ml * mr;
  out.identity_residual = out.lhs - scale * std::abs(out.tau);

  out.norms = density_norms(model, tp.x, p, cfg);
  const double q = out.norms.q();
  const double wx = w(tp.x);
  double sq_lin = 0.0;  // alpha (x-a)^2 / m(a,x) + beta (b-x)^2 / m(x,b)
  double sq_pow = 0.0;  // same with alpha^q, beta^q
  if (tp.alpha > 0.0) {
    sq_lin += tp.alpha * (tp.x - tp.a) * (tp.x - tp.a) / ml;
    sq_pow += std::pow(tp.alpha, q) * (tp.x - tp.a) * (tp.x - tp.a) / ml;
  }
  if (tp.beta > 0.0) {
    sq_lin += tp.beta * (tp.b - tp.x) * (tp.b - tp.x) / mr;
    sq_pow += std::pow(tp.beta, q) * (tp.b - tp.x) * (tp.b - tp.x) / mr;
  }
  out.bounds.inf = 0.5 * ml * mr * sq_lin * wx * out.norms.inf;
  out.bounds.p = ml * mr / std::pow(q + 1.0, 1.0 / q) * std::pow(sq_pow * wx, 1.0 / q) *
                 out.norms.p_norm;
  out.bounds.one = 0.5 * ml * mr * (tp.coeff_sum() + std::abs(tp.alpha - tp.beta)) *
                   out.norms.one;
  out.exact_bounds = bounds_exact(tp, w, out.norms, cfg).scaled(scale);
  return out;
}

CdfBound cdf_bound_symmetric(const DensityModel& model, double x, double p,
                             const QuadConfig& cfg) {
  const TauParams tp{model.a(), model.b(), x, 0.5, 0.5};
  if (!(x > tp.a && x < tp.b)) throw DomainError("cdf_bound_symmetric needs a < x < b");
  CdfBound out = cdf_bound_general(model, tp, p, cfg);
  const Weight& w = model.weight();
  const double ml = w.moment(tp.a, x, cfg);
  const double mr = w.moment(x, tp.b, cfg);
  const double wx = w(x);
  const double q = out.norms.q();
  const double left_sq = (x - tp.a) * (x - tp.a);
  const double right_sq = (tp.b - x) * (tp.b - x);
  out.bounds.inf = 0.25 * (mr * left_sq + ml * right_sq) * wx * out.norms.inf;
  out.bounds.p = ml * mr / (2.0 * std::pow(q + 1.0, 1.0 / q)) *
                 std::pow((left_sq / ml + right_sq / mr) * wx, 1.0 / q) *
                 out.norms.p_norm;
  out.bounds.one = 0.5 * ml * mr * out.norms.one;
  return out;
}

CdfLeftBound cdf_bound_left(const DensityModel& model, double x, double p,
                            const QuadConfig& cfg) {
  const TauParams tp{model.a(), model.b(), x, 1.0, 0.0};
  if (!(x > tp.a && x <= tp.b)) throw DomainError("cdf_bound_left needs a < x <= b");
  const Weight& w = model.weight();
  const Fn1D& f = model.density();
  validate_against(tp, w, cfg);

  CdfLeftBound out;
  CdfBound& r = out.bound;
  r.params = tp;
  const double ml = w.moment(tp.a, x, cfg);
  const double fx = f(x);
  r.cdf = cdf_value(model, x, cfg);
  r.lhs = std::abs(ml * fx - r.cdf);
  out.printed_lhs = std::abs(ml / (x - tp.a) * fx - r.cdf);
  r.tau = tau(f, w, tp, cfg);
  r.identity_residual = r.lhs - ml * std::abs(r.tau);

  r.norms = density_norms(model, x, p, cfg);
  const double q = r.norms.q();
  const double len = x - tp.a;
  const double wx = w(x);
  r.bounds.inf = 0.5 * len * len * wx * r.norms.inf;
  r.bounds.p = std::pow(len, 1.0 + 1.0 / q) * wx * r.norms.p_norm /
               std::pow(q + 1.0, 1.0 / q);
  r.bounds.one = len * r.norms.one;
  r.exact_bounds = bounds_exact(tp, w, r.norms, cfg).scaled(ml);
  return out;
}

double expectation_identity_check(const DensityModel& model, const QuadConfig& cfg) {
  const double a = model.a();
  const double b = model.b();
  const double area =
      integrate([&](double u) { return cdf_value(model, u, cfg); }, a, b, cfg).value;
  const Fn1D& f = model.density();
  const Fn1D uf = make_fn("u*f", [&f](double u) { return u * f(u); });
  const double expectation = weighted_integral(uf, model.weight(), a, b, cfg);
  return area - (b - expectation);
}

double cdf_derivative_sup(const DensityModel& model) {
  const Weight& w = model.weight();
  const Fn1D& f = model.density();
  const RealFn& we = w.evaluator();
  return norm_inf([&](double t) { return f(t) * we(t); }, model.a(), model.b());
}

}  // namespace obw
