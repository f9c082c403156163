#pragma once

/// Weight functions on a finite interval and their oriented moments.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "obw/quad.hpp"

namespace obw {

using MomentFn = std::function<double(double, double)>;

/// Nonnegative integrable density on [a, b]. Immutable and cheap to copy.
class Weight {
 public:
  /// `closed_moment`, when given, must return the oriented integral of the
  /// evaluator over [c, d]. `powers` describes algebraic endpoint behaviour
  /// for the numeric fallback.
  Weight(std::string name, double a, double b, RealFn evaluator,
         std::optional<MomentFn> closed_moment = std::nullopt,
         EndpointPowers powers = {});

  const std::string& name() const { return state_->name; }
  double a() const { return state_->a; }
  double b() const { return state_->b; }
  EndpointPowers endpoint_powers() const { return state_->powers; }
  bool has_closed_moment() const { return state_->closed.has_value(); }

  /// w(t); throws DomainError for t outside [a, b].
  double operator()(double t) const;

  /// Evaluator without the domain check, for quadrature callbacks.
  const RealFn& evaluator() const { return state_->eval; }

  /// Oriented m(c, d). Uses the closed form when present.
  double moment(double c, double d,
                const QuadConfig& cfg = default_quad_config()) const;

  /// Oriented m(c, d) by quadrature, ignoring any closed form.
  double numeric_moment(double c, double d,
                        const QuadConfig& cfg = default_quad_config()) const;

  /// m(a, b), computed once at construction.
  double total_mass() const { return state_->total; }

  /// True when |m| is below the zero-mass threshold 1e-13 * m(a, b).
  bool is_negligible_mass(double m) const;

 private:
  struct State {
    std::string name;
    double a;
    double b;
    RealFn eval;
    std::optional<MomentFn> closed;
    EndpointPowers powers;
    double total = 0.0;
  };
  std::shared_ptr<const State> state_;

  void check_in_domain(double t, const char* what) const;
};

double eval_weight(const Weight& w, double t);
double moment(const Weight& w, double c, double d,
              const QuadConfig& cfg = default_quad_config());

/// Named weight plus numeric parameters, e.g. {"power", {{"p", 1}, {"q", 0}}}.
struct WeightSpec {
  std::string name;
  std::map<std::string, double> params;
};

/// Parses "name" or "name:key=value:key=value".
WeightSpec parse_weight_spec(const std::string& text);

/// Canonical text form accepted by parse_weight_spec.
std::string to_string(const WeightSpec& spec);

/// Builds a registry weight on [a, b]. Recognised names:
///   uniform                     w = 1
///   power       p, q (> -1)     w = (t - a)^p (b - t)^q
///   increasing                  power with p = 1, q = 0
///   decreasing                  power with p = 0, q = 1
///   arcsine                     power with p = q = -1/2
///   exponential lambda (=1)     w = exp(-lambda t)
///   truncnormal mu, sigma       normal density restricted to [a, b]
/// Throws SpecError for unknown names or parameters and DomainError for
/// non-integrable parameter values.
Weight builtin_weight(const WeightSpec& spec, double a, double b);

/// Names accepted by builtin_weight.
std::vector<std::string> builtin_weight_names();

}  // namespace obw
