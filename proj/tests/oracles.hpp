#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// adaptive engine: integrals use a fixed composite Gauss-Legendre rule and
// suprema use a dense uniform grid.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace oracle {

// Composite 5-point Gauss-Legendre on `panels` equal panels.
inline double integrate(const std::function<double(double)>& g, double c, double d,
                        int panels = 4000) {
  static constexpr std::array<double, 5> nodes = {
      0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
      0.9061798459386640};
  static constexpr std::array<double, 5> weights = {
      0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
      0.2369268850561891, 0.2369268850561891};
  const double h = (d - c) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double mid = c + (i + 0.5) * h;
    for (int k = 0; k < 5; ++k) sum += weights[k] * g(mid + 0.5 * h * nodes[k]);
  }
  return 0.5 * h * sum;
}

// Same rule split at one interior point.
inline double integrate_split(const std::function<double(double)>& g, double c,
                              double split, double d, int panels = 4000) {
  return integrate(g, c, split, panels) + integrate(g, split, d, panels);
}

inline double grid_max_abs(const std::function<double(double)>& g, double c, double d,
                           int points = 200001) {
  double best = 0.0;
  for (int i = 0; i < points; ++i) {
    best = std::max(best, std::abs(g(c + (d - c) * i / (points - 1))));
  }
  return best;
}

}  // namespace oracle
