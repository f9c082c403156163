#pragma once

/// Named test functions, weights and densities on [0, 1] shared by the
/// verification command and the test suites.

#include <optional>
#include <string>
#include <vector>

#include "obw/bounds.hpp"
#include "obw/cdf.hpp"

namespace obw::corpus {

/// Functions with closed-form derivative and antiderivative:
/// linear, square, cubic (t^3 - t), quartic, sine, exp.
std::vector<Fn1D> functions();

/// Looks up one of functions() by name.
std::optional<Fn1D> function(const std::string& name);

std::vector<std::string> function_names();

/// Every registry weight with default parameters on [a, b].
std::vector<Weight> weights(double a = 0.0, double b = 1.0);

/// Evaluation points used by the corpus sweeps.
std::vector<double> x_values();

std::vector<Coefficients> coefficient_pairs();

/// Densities uniform, linear 2u, quadratic 3u^2 and a bell shape, each
/// paired with the uniform, decreasing and exponential weights and rescaled
/// to unit weighted mass.
std::vector<DensityModel> density_models();

}  // namespace obw::corpus
