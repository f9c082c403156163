#include "obw/corpus.hpp"

#include <cmath>

namespace obw::corpus {

std::vector<Fn1D> functions() {
  return {
      make_fn(
          "linear", [](double t) { return t; }, RealFn([](double) { return 1.0; }),
          RealFn([](double t) { return 0.5 * t * t; })),
      make_fn(
          "square", [](double t) { return t * t; },
          RealFn([](double t) { return 2.0 * t; }),
          RealFn([](double t) { return t * t * t / 3.0; })),
      make_fn(
          "cubic", [](double t) { return t * t * t - t; },
          RealFn([](double t) { return 3.0 * t * t - 1.0; }),
          RealFn([](double t) { return 0.25 * t * t * t * t - 0.5 * t * t; })),
      make_fn(
          "quartic", [](double t) { return t * t * t * t; },
          RealFn([](double t) { return 4.0 * t * t * t; }),
          RealFn([](double t) { return std::pow(t, 5) / 5.0; })),
      make_fn(
          "sine", [](double t) { return std::sin(t); },
          RealFn([](double t) { return std::cos(t); }),
          RealFn([](double t) { return -std::cos(t); })),
      make_fn(
          "exp", [](double t) { return std::exp(t); },
          RealFn([](double t) { return std::exp(t); }),
          RealFn([](double t) { return std::exp(t); })),
  };
}

std::optional<Fn1D> function(const std::string& name) {
  for (auto& f : functions()) {
    if (f.name == name) return f;
  }
  return std::nullopt;
}

std::vector<std::string> function_names() {
  std::vector<std::string> names;
  for (const auto& f : functions()) names.push_back(f.name);
  return names;
}

std::vector<Weight> weights(double a, double b) {
  std::vector<Weight> out;
  for (const auto& name : {"uniform", "increasing", "decreasing", "exponential",
                           "arcsine", "truncnormal"}) {
    out.push_back(builtin_weight({name, {}}, a, b));
  }
  return out;
}

std::vector<double> x_values() { return {0.25, 0.5, 0.8}; }

std::vector<Coefficients> coefficient_pairs() { return {{1.0, 1.0}, {2.0, 1.0}}; }

std::vector<DensityModel> density_models() {
  const std::vector<Fn1D> densities = {
      make_fn(
          "uniform", [](double) { return 1.0; }, RealFn([](double) { return 0.0; })),
      make_fn(
          "2*t", [](double u) { return 2.0 * u; }, RealFn([](double) { return 2.0; })),
      make_fn(
          "3*t^2", [](double u) { return 3.0 * u * u; },
          RealFn([](double u) { return 6.0 * u; })),
      make_fn(
          "bell", [](double u) { return std::exp(-0.5 * std::pow((u - 0.5) / 0.15, 2)); },
          RealFn([](double u) {
            const double z = (u - 0.5) / 0.15;
            return -z / 0.15 * std::exp(-0.5 * z * z);
          })),
  };
  std::vector<DensityModel> out;
  for (const auto& f : densities) {
    for (const auto& wname : {"uniform", "decreasing", "exponential"}) {
      out.push_back(DensityModel::normalized(f, builtin_weight({wname, {}}, 0.0, 1.0)));
    }
  }
  return out;
}

}  // namespace obw::corpus
