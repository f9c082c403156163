#include "obw/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <vector>

#include "obw/error.hpp"
#include "obw/weights.hpp"

namespace obw {

namespace {

// Kronrod 15-point abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.lo > y.lo;  // deterministic order for equal errors
  }
};

double checked(const RealFn& g, double t) {
  const double v = g(t);
  if (!std::isfinite(v)) {
    throw QuadratureError("non-finite integrand value at t = " +
                          std::to_string(t));
  }
  return v;
}

Panel gauss_kronrod(const RealFn& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = checked(g, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(g, center - dx);
    const double f2 = checked(g, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

QuadResult adapt(const RealFn& g, std::vector<Panel> panels,
                 const QuadConfig& cfg, double c, double d) {
  double value = 0.0;
  double error = 0.0;
  for (const auto& p : panels) {
    value += p.value;
    error += p.error;
  }
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap(
      ByError{}, std::move(panels));
  int count = static_cast<int>(heap.size());

  auto totals = [&heap] {
    // Summation in ascending lo order keeps the result independent of the
    // heap layout.
    std::vector<Panel> all;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : all) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
    if (count >= cfg.max_subdivisions) {
      throw QuadratureError(
          "adaptive integration over [" + std::to_string(c) + ", " +
          std::to_string(d) + "] did not converge after " +
          std::to_string(count) + " subdivisions (error estimate " +
          std::to_string(error) + ")");
    }
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw QuadratureError("interval width reached machine precision near t = " +
                            std::to_string(mid));
    }
    heap.pop();
    const Panel left = gauss_kronrod(g, worst.lo, mid);
    const Panel right = gauss_kronrod(g, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  const auto [v, e] = totals();
  return {v, e, count};
}

}  // namespace

Fn1D make_fn(std::string name, RealFn value, std::optional<RealFn> derivative,
             std::optional<RealFn> antiderivative) {
  return Fn1D{std::move(name), std::move(value), std::move(derivative),
              std::move(antiderivative)};
}

Fn1D constant_fn(double k) {
  return make_fn(
      std::to_string(k), [k](double) { return k; },
      RealFn([](double) { return 0.0; }), RealFn([k](double t) { return k * t; }));
}

double derivative_at(const Fn1D& f, double t, double lo, double hi) {
  if (f.derivative) return (*f.derivative)(t);
  const double h =
      std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(t));
  if (t - h < lo) {
    return (-3.0 * f(t) + 4.0 * f(t + h) - f(t + 2.0 * h)) / (2.0 * h);
  }
  if (t + h > hi) {
    return (3.0 * f(t) - 4.0 * f(t - h) + f(t - 2.0 * h)) / (2.0 * h);
  }
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

RealFn derivative_fn(const Fn1D& f, double lo, double hi) {
  return [f, lo, hi](double t) { return derivative_at(f, t, lo, hi); };
}

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("quadrature abs_tol must be > 0");
  if (!(rel_tol >= 0.0)) throw DomainError("quadrature rel_tol must be >= 0");
  if (max_subdivisions < 1) {
    throw DomainError("quadrature max_subdivisions must be >= 1");
  }
}

QuadConfig default_quad_config() {
  QuadConfig cfg;
  if (const char* env = std::getenv("OBW_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw SpecError(std::string("OBW_TOL is not a positive number: ") + env);
    }
    cfg.abs_tol = tol;
  }
  return cfg;
}

QuadResult integrate(const RealFn& g, double c, double d, const QuadConfig& cfg) {
  return integrate(g, c, d, std::span<const double>{}, cfg);
}

QuadResult integrate(const RealFn& g, double c, double d,
                     std::span<const double> breakpoints, const QuadConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(c) || !std::isfinite(d)) {
    throw DomainError("integration limits must be finite");
  }
  if (c == d) return {};
  if (c > d) {
    QuadResult r = integrate(g, d, c, breakpoints, cfg);
    r.value = -r.value;
    return r;
  }

  std::vector<double> edges{c};
  for (double p : breakpoints) {
    if (p > c && p < d) edges.push_back(p);
  }
  edges.push_back(d);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    panels.push_back(gauss_kronrod(g, edges[i], edges[i + 1]));
  }
  return adapt(g, std::move(panels), cfg, c, d);
}

QuadResult integrate_singular(const RealFn& g, double c, double d,
                              EndpointPowers powers, const QuadConfig& cfg) {
  if (c == d) return {};
  if (c > d) {
    QuadResult r =
        integrate_singular(g, d, c, {powers.right, powers.left}, cfg);
    r.value = -r.value;
    return r;
  }
  for (double p : {powers.left, powers.right}) {
    if (!(p > -1.0)) throw DomainError("endpoint exponent must be > -1");
  }
  const bool sing_left = powers.left < 0.0;
  const bool sing_right = powers.right < 0.0;
  if (!sing_left && !sing_right) return integrate(g, c, d, cfg);

  const double mid = 0.5 * (c + d);
  QuadConfig half_cfg = cfg;
  half_cfg.abs_tol = 0.5 * cfg.abs_tol;
  QuadResult total;

  auto add = [&total](const QuadResult& r) {
    total.value += r.value;
    total.error += r.error;
    total.intervals += r.intervals;
  };

  // t = e + (mid - e) * u^k with k = 1 / (1 + p) turns (t - e)^p into a
  // bounded integrand in u on [0, 1].
  if (sing_left) {
    const double k = 1.0 / (1.0 + powers.left);
    const double len = mid - c;
    add(integrate(
        [&g, c, len, k](double u) {
          return g(c + len * std::pow(u, k)) * len * k * std::pow(u, k - 1.0);
        },
        0.0, 1.0, half_cfg));
  } else {
    add(integrate(g, c, mid, half_cfg));
  }
  if (sing_right) {
    const double k = 1.0 / (1.0 + powers.right);
    const double len = d - mid;
    add(integrate(
        [&g, d, len, k](double u) {
          return g(d - len * std::pow(u, k)) * len * k * std::pow(u, k - 1.0);
        },
        0.0, 1.0, half_cfg));
  } else {
    add(integrate(g, mid, d, half_cfg));
  }
  return total;
}

double weighted_integral(const Fn1D& f, const Weight& w, double c, double d,
                         const QuadConfig& cfg) {
  if (c == d) return 0.0;
  if (c > d) return -weighted_integral(f, w, d, c, cfg);
  if (c < w.a() || d > w.b()) {
    throw DomainError("weighted_integral: [c, d] is not inside the weight domain");
  }
  const RealFn& we = w.evaluator();
  const auto integrand = [&f, &we](double t) { return f(t) * we(t); };
  const EndpointPowers wp = w.endpoint_powers();
  const EndpointPowers powers{c == w.a() ? wp.left : 0.0,
                              d == w.b() ? wp.right : 0.0};
  return integrate_singular(integrand, c, d, powers, cfg).value;
}

double weighted_mean(const Fn1D& f, const Weight& w, double c, double d,
                     const QuadConfig& cfg) {
  const double m = w.moment(c, d, cfg);
  if (w.is_negligible_mass(m) || m <= 0.0) {
    throw DegenerateError("weighted mean over [" + std::to_string(c) + ", " +
                          std::to_string(d) + "] is undefined: weight mass " +
                          std::to_string(m));
  }
  return weighted_integral(f, w, c, d, cfg) / m;
}

double unweighted_mean(const Fn1D& f, double c, double d, const QuadConfig& cfg) {
  if (!(c < d)) {
    throw DegenerateError("unweighted mean needs c < d");
  }
  return integrate(f.value, c, d, cfg).value / (d - c);
}

}  // namespace obw
