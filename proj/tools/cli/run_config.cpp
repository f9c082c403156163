#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "obw/corpus.hpp"
#include "obw/expr.hpp"

namespace obw::cli {

using nlohmann::json;

const char* to_string(Command command) {
  switch (command) {
    case Command::bounds: return "bounds";
    case Command::verify: return "verify";
    case Command::audit: return "audit";
    case Command::sharpness: return "sharpness";
    case Command::cdf: return "cdf";
  }
  return "?";
}

namespace {

const std::set<std::string> kCommon = {"a", "b", "tol", "max-subdiv", "output", "format",
                                       "config"};

const std::map<Command, std::set<std::string>> kAllowed = {
    {Command::bounds,
     {"x", "x-grid", "alpha", "beta", "coeffs", "weight", "weights", "weight-expr",
      "function", "p", "norm"}},
    {Command::verify,
     {"x", "x-grid", "alpha", "beta", "coeffs", "weight", "weights", "weight-expr",
      "function", "p"}},
    {Command::audit,
     {"x", "x-grid", "alpha", "beta", "coeffs", "weight", "weights", "weight-expr"}},
    {Command::sharpness,
     {"x", "x-grid", "alpha", "beta", "coeffs", "weight", "weights", "weight-expr",
      "kind"}},
    {Command::cdf,
     {"x", "x-grid", "alpha", "beta", "weight", "weight-expr", "density", "p",
      "normalize", "with-fw-norm"}},
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::optional<double> to_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (*end != '\0') return std::nullopt;
  return v;
}

// Reads settings values with type coercion, collecting problems.
class Reader {
 public:
  Reader(const json& settings, std::vector<std::string>& problems)
      : s_(settings), problems_(problems) {}

  bool has(const std::string& key) const { return s_.contains(key); }

  std::optional<double> number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const json& v = s_.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      if (auto d = to_double(v.get<std::string>())) return d;
    }
    problem("--" + key + " expects a number, got " + v.dump());
    return std::nullopt;
  }

  std::optional<std::string> text(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const json& v = s_.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    problem("--" + key + " expects text, got " + v.dump());
    return std::nullopt;
  }

  std::vector<std::string> list(const std::string& key) {
    std::vector<std::string> out;
    if (!has(key)) return out;
    const json& v = s_.at(key);
    if (v.is_array()) {
      for (const auto& item : v) {
        if (item.is_string()) {
          out.push_back(item.get<std::string>());
        } else {
          problem("--" + key + " expects a list of text, got " + v.dump());
          return {};
        }
      }
      return out;
    }
    if (auto t = text(key)) return split(*t, ',');
    return out;
  }

  bool flag(const std::string& key) {
    if (!has(key)) return false;
    const json& v = s_.at(key);
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_string() && (v == "true" || v == "false")) return v == "true";
    problem("--" + key + " expects true or false, got " + v.dump());
    return false;
  }

  void problem(std::string message) { problems_.push_back(std::move(message)); }

 private:
  const json& s_;
  std::vector<std::string>& problems_;
};

void check_parses(Reader& r, const std::string& key, const std::string& source,
                  bool allow_registry) {
  if (allow_registry && corpus::function(source)) return;
  try {
    parse(source);
  } catch (const ParseError& e) {
    r.problem("--" + key + " \"" + source + "\": " + e.what());
  }
}

void check_weight_spec(Reader& r, const std::string& text) {
  try {
    const WeightSpec spec = parse_weight_spec(text);
    const auto names = builtin_weight_names();
    if (std::find(names.begin(), names.end(), spec.name) == names.end()) {
      r.problem("unknown weight \"" + spec.name + "\"");
    }
  } catch (const Error& e) {
    r.problem("weight \"" + text + "\": " + e.what());
  }
}

}  // namespace

bool option_applies(Command command, const std::string& key) {
  return kCommon.count(key) > 0 || kAllowed.at(command).count(key) > 0;
}

std::vector<double> interior_grid(double a, double b, int n) {
  std::vector<double> xs;
  for (int k = 1; k <= n; ++k) xs.push_back(a + (b - a) * k / (n + 1));
  return xs;
}

std::vector<Coefficients> parse_coefficients(const std::string& text) {
  std::vector<Coefficients> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    std::optional<double> alpha, beta;
    if (parts.size() == 2) {
      alpha = to_double(parts[0]);
      beta = to_double(parts[1]);
    }
    if (!alpha || !beta) {
      throw UsageError("coefficient pair \"" + item + "\" is not alpha:beta");
    }
    out.push_back({*alpha, *beta});
  }
  return out;
}

RunConfig build_run_config(Command command, const json& settings) {
  std::vector<std::string> problems;
  Reader r(settings, problems);
  RunConfig cfg;
  cfg.command = command;

  if (!settings.is_object()) {
    throw UsageError("configuration must be a JSON object");
  }
  for (const auto& [key, value] : settings.items()) {
    if (!option_applies(command, key)) {
      r.problem("--" + key + " is not used by " + to_string(command));
    }
  }

  if (auto a = r.number("a")) cfg.a = *a;
  if (auto b = r.number("b")) cfg.b = *b;
  if (!(std::isfinite(cfg.a) && std::isfinite(cfg.b) && cfg.a < cfg.b)) {
    r.problem("interval needs finite a < b");
  }

  // Evaluation points.
  const bool has_x = r.has("x");
  const bool has_grid = r.has("x-grid");
  if (has_x && has_grid) r.problem("--x and --x-grid are mutually exclusive");
  if (has_x) {
    for (const auto& item : r.list("x")) {
      const auto v = to_double(item);
      if (!v) {
        r.problem("--x expects numbers, got \"" + item + "\"");
      } else if (!(*v >= cfg.a && *v <= cfg.b)) {
        r.problem("--x " + item + " lies outside [a, b]");
      } else {
        cfg.xs.push_back(*v);
      }
    }
  } else if (has_grid) {
    const auto n = r.number("x-grid");
    if (n && (*n < 1 || *n != std::floor(*n) || *n > 100000)) {
      r.problem("--x-grid expects a positive integer");
    } else if (n) {
      cfg.xs = interior_grid(cfg.a, cfg.b, static_cast<int>(*n));
    }
  } else if (command == Command::bounds || command == Command::cdf) {
    r.problem("missing --x (or --x-grid)");
  } else if (command == Command::audit || command == Command::sharpness) {
    cfg.xs = interior_grid(cfg.a, cfg.b, 9);
  }

  // Coefficients.
  const bool has_pair = r.has("alpha") || r.has("beta");
  if (has_pair && r.has("coeffs")) {
    r.problem("--alpha/--beta and --coeffs are mutually exclusive");
  }
  if (r.has("coeffs")) {
    try {
      if (auto t = r.text("coeffs")) cfg.coeffs = parse_coefficients(*t);
    } catch (const UsageError& e) {
      r.problem(e.what());
    }
  } else if (has_pair || command != Command::verify) {
    Coefficients c;
    if (auto v = r.number("alpha")) c.alpha = *v;
    if (auto v = r.number("beta")) c.beta = *v;
    cfg.coeffs = {c};
  }
  for (const auto& c : cfg.coeffs) {
    if (!(c.alpha >= 0 && c.beta >= 0 && c.alpha + c.beta > 0 &&
          std::isfinite(c.alpha + c.beta))) {
      r.problem("coefficients need alpha, beta >= 0 with alpha + beta > 0");
      break;
    }
  }

  // Weights.
  if (r.has("weight") && r.has("weights")) {
    r.problem("--weight and --weights are mutually exclusive");
  }
  std::vector<std::string> specs = r.list(r.has("weights") ? "weights" : "weight");
  for (const auto& s : specs) {
    check_weight_spec(r, s);
    cfg.weights.push_back({s, false});
  }
  if (auto e = r.text("weight-expr")) {
    check_parses(r, "weight-expr", *e, false);
    cfg.weights.push_back({*e, true});
  }
  if (cfg.weights.empty()) {
    if (command == Command::audit) {
      for (const char* name : {"uniform", "increasing", "decreasing"}) {
        cfg.weights.push_back({name, false});
      }
    } else if (command != Command::verify) {
      cfg.weights.push_back({"uniform", false});
    }
  }
  if (command == Command::cdf && cfg.weights.size() > 1) {
    r.problem("cdf takes a single weight");
  }

  if ((cfg.function = r.text("function"))) {
    check_parses(r, "function", *cfg.function, true);
  } else if (command == Command::bounds) {
    r.problem("missing --function");
  }
  if ((cfg.density = r.text("density"))) {
    check_parses(r, "density", *cfg.density, true);
  } else if (command == Command::cdf) {
    r.problem("missing --density");
  }

  if ((cfg.p = r.number("p")) && !(*cfg.p > 1.0 && std::isfinite(*cfg.p))) {
    r.problem("--p must be a finite number greater than 1");
  }
  if (auto n = r.text("norm")) {
    if (*n == "inf") {
      cfg.norm = NormKind::inf;
    } else if (*n == "p") {
      cfg.norm = NormKind::p;
    } else if (*n == "one") {
      cfg.norm = NormKind::one;
    } else {
      r.problem("--norm must be inf, p or one");
    }
  }

  try {
    cfg.quad = default_quad_config();
  } catch (const Error& e) {
    r.problem(e.what());
  }
  if (auto t = r.number("tol")) {
    if (*t > 0 && std::isfinite(*t)) {
      cfg.quad.abs_tol = *t;
    } else {
      r.problem("--tol must be positive");
    }
  }
  if (auto m = r.number("max-subdiv")) {
    if (*m >= 1 && *m == std::floor(*m) && *m <= 1e7) {
      cfg.quad.max_subdivisions = static_cast<int>(*m);
    } else {
      r.problem("--max-subdiv must be a positive integer");
    }
  }

  cfg.output = r.text("output");
  cfg.format = command == Command::bounds ? Format::text : Format::csv;
  if (auto f = r.text("format")) {
    if (*f == "csv") {
      cfg.format = Format::csv;
    } else if (*f == "json") {
      cfg.format = Format::json;
    } else if (*f == "text") {
      cfg.format = Format::text;
    } else {
      r.problem("--format must be csv, json or text");
    }
  }
  if (auto k = r.text("kind")) {
    if (*k == "exact_inf") {
      cfg.kind = SharpnessKind::exact_inf;
    } else if (*k == "exact_one") {
      cfg.kind = SharpnessKind::exact_one;
    } else {
      r.problem("--kind must be exact_inf or exact_one");
    }
  }
  cfg.normalize = r.flag("normalize");
  cfg.with_fw_norm = r.flag("with-fw-norm");

  if (!problems.empty()) {
    std::string message = "invalid " + std::string(to_string(command)) + " configuration:";
    for (const auto& p : problems) message += "\n  " + p;
    throw UsageError(message);
  }
  return cfg;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw UsageError("config file " + path + " is not a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
}

Weight make_weight(const WeightChoice& choice, double a, double b) {
  if (!choice.is_expression) return builtin_weight(parse_weight_spec(choice.text), a, b);
  const ExprFunction f = make_expr_function(choice.text);
  return Weight(choice.text, a, b, f.fn.value);
}

Fn1D make_function(const std::string& text) {
  if (auto f = corpus::function(text)) return *f;
  return make_expr_function(text).fn;
}

}  // namespace obw::cli
