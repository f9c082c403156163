#include "obw/weights.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "obw/error.hpp"

namespace obw {

Weight::Weight(std::string name, double a, double b, RealFn evaluator,
               std::optional<MomentFn> closed_moment, EndpointPowers powers) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("weight domain must be a finite interval with a < b");
  }
  auto state = std::make_shared<State>();
  state->name = std::move(name);
  state->a = a;
  state->b = b;
  state->eval = std::move(evaluator);
  state->closed = std::move(closed_moment);
  state->powers = powers;
  state_ = state;

  constexpr int kProbes = 64;
  for (int i = 1; i < kProbes; ++i) {
    const double t = a + (b - a) * i / kProbes;
    const double v = state->eval(t);
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("weight '" + state->name + "' is negative or not finite at t = " +
                        std::to_string(t));
    }
  }
  state->total = moment(a, b);
  if (!std::isfinite(state->total) || !(state->total > 0.0)) {
    throw DomainError("weight '" + state->name + "' has no positive finite mass");
  }
}

void Weight::check_in_domain(double t, const char* what) const {
  if (!(t >= a() && t <= b())) {
    std::ostringstream os;
    os << what << ": t = " << t << " lies outside the weight domain [" << a()
       << ", " << b() << "]";
    throw DomainError(os.str());
  }
}

double Weight::operator()(double t) const {
  check_in_domain(t, "eval_weight");
  return state_->eval(t);
}

double Weight::moment(double c, double d, const QuadConfig& cfg) const {
  check_in_domain(c, "moment");
  check_in_domain(d, "moment");
  if (c == d) return 0.0;
  if (state_->closed) return (*state_->closed)(c, d);
  return numeric_moment(c, d, cfg);
}

double Weight::numeric_moment(double c, double d, const QuadConfig& cfg) const {
  check_in_domain(c, "numeric_moment");
  check_in_domain(d, "numeric_moment");
  if (c == d) return 0.0;
  if (c > d) return -numeric_moment(d, c, cfg);
  const EndpointPowers powers{c == a() ? state_->powers.left : 0.0,
                              d == b() ? state_->powers.right : 0.0};
  return integrate_singular(state_->eval, c, d, powers, cfg).value;
}

bool Weight::is_negligible_mass(double m) const {
  return std::abs(m) < 1e-13 * state_->total;
}

double eval_weight(const Weight& w, double t) { return w(t); }

double moment(const Weight& w, double c, double d, const QuadConfig& cfg) {
  return w.moment(c, d, cfg);
}

WeightSpec parse_weight_spec(const std::string& text) {
  WeightSpec spec;
  std::stringstream ss(text);
  std::string part;
  bool first = true;
  while (std::getline(ss, part, ':')) {
    if (first) {
      spec.name = part;
      first = false;
      continue;
    }
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw SpecError("weight parameter '" + part + "' is not of the form key=value");
    }
    const std::string key = part.substr(0, eq);
    const std::string val = part.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (val.empty() || *end != '\0') {
      throw SpecError("weight parameter '" + key + "' has non-numeric value '" + val + "'");
    }
    spec.params[key] = v;
  }
  if (spec.name.empty()) throw SpecError("empty weight specification");
  return spec;
}

std::string to_string(const WeightSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << spec.name;
  for (const auto& [k, v] : spec.params) os << ':' << k << '=' << v;
  return os.str();
}

namespace {

double param(const WeightSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

void require_params(const WeightSpec& spec, std::set<std::string> allowed) {
  for (const auto& [k, v] : spec.params) {
    if (!allowed.contains(k)) {
      throw SpecError("weight '" + spec.name + "' does not take parameter '" + k + "'");
    }
    if (!std::isfinite(v)) {
      throw DomainError("weight parameter '" + k + "' must be finite");
    }
  }
}

Weight power_weight(std::string name, double a, double b, double p, double q) {
  if (!(p > -1.0) || !(q > -1.0)) {
    throw DomainError("power weight needs p > -1 and q > -1 to be integrable");
  }
  const double len = b - a;
  const double scale = std::pow(len, p + q + 1.0);
  auto eval = [a, b, p, q](double t) {
    const double left = t - a;
    const double right = b - t;
    const double lp = p == 0.0 ? 1.0 : std::pow(std::max(left, 0.0), p);
    const double rq = q == 0.0 ? 1.0 : std::pow(std::max(right, 0.0), q);
    return lp * rq;
  };
  // m(c, d) = len^(p+q+1) [B_s(d)(p+1, q+1) - B_s(c)(p+1, q+1)], taking the
  // upper incomplete form when both points sit in the right half to avoid
  // cancellation near b.
  auto closed = [a, len, p, q, scale](double c, double d) {
    const double sc = std::clamp((c - a) / len, 0.0, 1.0);
    const double sd = std::clamp((d - a) / len, 0.0, 1.0);
    double diff = 0.0;
    if (sc > 0.5 && sd > 0.5) {
      diff = boost::math::betac(p + 1.0, q + 1.0, sc) -
             boost::math::betac(p + 1.0, q + 1.0, sd);
    } else {
      diff = boost::math::beta(p + 1.0, q + 1.0, sd) -
             boost::math::beta(p + 1.0, q + 1.0, sc);
    }
    return scale * diff;
  };
  return Weight(std::move(name), a, b, eval, MomentFn(closed), EndpointPowers{p, q});
}

}  // namespace

std::vector<std::string> builtin_weight_names() {
  return {"uniform", "power", "increasing", "decreasing",
          "arcsine", "exponential", "truncnormal"};
}

Weight builtin_weight(const WeightSpec& spec, double a, double b) {
  const std::string& n = spec.name;
  if (n == "uniform") {
    require_params(spec, {});
    return Weight(
        "uniform", a, b, [](double) { return 1.0; },
        MomentFn([](double c, double d) { return d - c; }));
  }
  if (n == "power") {
    require_params(spec, {"p", "q"});
    return power_weight(to_string(spec), a, b, param(spec, "p", 0.0),
                        param(spec, "q", 0.0));
  }
  if (n == "increasing") {
    require_params(spec, {});
    return power_weight("increasing", a, b, 1.0, 0.0);
  }
  if (n == "decreasing") {
    require_params(spec, {});
    return power_weight("decreasing", a, b, 0.0, 1.0);
  }
  if (n == "arcsine") {
    require_params(spec, {});
    return power_weight("arcsine", a, b, -0.5, -0.5);
  }
  if (n == "exponential") {
    require_params(spec, {"lambda"});
    const double lambda = param(spec, "lambda", 1.0);
    auto closed = [lambda](double c, double d) {
      if (lambda == 0.0) return d - c;
      return -std::exp(-lambda * c) * std::expm1(-lambda * (d - c)) / lambda;
    };
    return Weight(
        spec.params.empty() ? "exponential" : to_string(spec), a, b,
        [lambda](double t) { return std::exp(-lambda * t); }, MomentFn(closed));
  }
  if (n == "truncnormal") {
    require_params(spec, {"mu", "sigma"});
    const double mu = param(spec, "mu", 0.5 * (a + b));
    const double sigma = param(spec, "sigma", 0.25 * (b - a));
    if (!(sigma > 0.0)) throw DomainError("truncnormal needs sigma > 0");
    // Lower and upper normal tail probabilities from erfc keep differences
    // accurate on either side of the mean.
    auto lower = [](double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); };
    auto upper = [](double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); };
    auto prob = [=](double zc, double zd) {
      if (zc > 0.0 && zd > 0.0) return upper(zc) - upper(zd);
      return lower(zd) - lower(zc);
    };
    const double mass = prob((a - mu) / sigma, (b - mu) / sigma);
    if (!(mass > 0.0)) throw DomainError("truncnormal has no mass on [a, b]");
    auto eval = [=](double t) {
      const double z = (t - mu) / sigma;
      return std::exp(-0.5 * z * z) /
             (sigma * std::sqrt(2.0 * std::numbers::pi) * mass);
    };
    auto closed = [=](double c, double d) {
      return prob((c - mu) / sigma, (d - mu) / sigma) / mass;
    };
    return Weight(spec.params.empty() ? "truncnormal" : to_string(spec), a, b,
                  eval, MomentFn(closed));
  }
  throw SpecError("unknown weight '" + n + "'");
}

}  // namespace obw
