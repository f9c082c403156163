#pragma once

// Command configuration assembled from a JSON file and command-line flags.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "obw/bounds.hpp"
#include "report.hpp"

namespace obw::cli {

enum class Command { bounds, verify, audit, sharpness, cdf };

const char* to_string(Command command);

// Invalid invocation; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A registry spec ("power:p=1:q=0") or an expression in t.
struct WeightChoice {
  std::string text;
  bool is_expression = false;
};

struct RunConfig {
  Command command = Command::bounds;
  double a = 0.0;
  double b = 1.0;
  std::vector<double> xs;  // empty means the command default
  std::vector<Coefficients> coeffs;
  std::vector<WeightChoice> weights;
  std::optional<std::string> function;
  std::optional<std::string> density;
  std::optional<double> p;
  std::optional<NormKind> norm;
  QuadConfig quad;
  std::optional<std::string> output;
  Format format = Format::csv;
  SharpnessKind kind = SharpnessKind::exact_inf;
  bool normalize = false;
  bool with_fw_norm = false;
};

// True when the setting (long flag name without dashes) is used by `command`.
bool option_applies(Command command, const std::string& key);

// Settings keys are the long flag names without the leading dashes.
// Validates everything at once; all problems go into one UsageError.
RunConfig build_run_config(Command command, const nlohmann::json& settings);

// Reads a JSON object from `path`. Throws UsageError when unreadable.
nlohmann::json load_config_file(const std::string& path);

// Interior grid a + (b - a) k / (n + 1), k = 1..n.
std::vector<double> interior_grid(double a, double b, int n);

// Parses "1:1,2:1".
std::vector<Coefficients> parse_coefficients(const std::string& text);

Weight make_weight(const WeightChoice& choice, double a, double b);

// Registry name (linear, square, ...) or an expression in t.
Fn1D make_function(const std::string& text);

}  // namespace obw::cli
