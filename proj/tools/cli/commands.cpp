#include "commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "obw/corpus.hpp"
#include "obw/error.hpp"
#include "obw/verify.hpp"

namespace obw::cli {

namespace {

// Re-raises a library error with the configuration it came from.
template <class F>
auto with_context(const std::string& context, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(context + ": " + e.what());
  }
}

std::string describe(const std::string& weight, double x, const Coefficients& c) {
  std::ostringstream os;
  os << "weight " << weight << ", x=" << x << ", alpha=" << c.alpha << ", beta=" << c.beta;
  return os.str();
}

std::vector<Weight> build_weights(const RunConfig& cfg) {
  std::vector<Weight> out;
  for (const auto& choice : cfg.weights) {
    out.push_back(with_context("weight " + choice.text,
                               [&] { return make_weight(choice, cfg.a, cfg.b); }));
  }
  return out;
}

std::vector<NormKind> branches(const RunConfig& cfg) {
  if (cfg.norm) return {*cfg.norm};
  return {NormKind::inf, NormKind::p, NormKind::one};
}

const char* suffix(NormKind k) {
  switch (k) {
    case NormKind::inf: return "inf";
    case NormKind::p: return "p";
    case NormKind::one: return "one";
  }
  return "?";
}

double pick(const BoundTriple& t, NormKind k) {
  switch (k) {
    case NormKind::inf: return t.inf;
    case NormKind::p: return t.p;
    case NormKind::one: return t.one;
  }
  return 0.0;
}

double pick(const NormTriple& n, NormKind k) {
  switch (k) {
    case NormKind::inf: return n.inf;
    case NormKind::p: return n.p_norm;
    case NormKind::one: return n.one;
  }
  return 0.0;
}

Table bounds_report(const RunConfig& cfg) {
  const Fn1D f = make_function(*cfg.function);
  const double p = cfg.p.value_or(2.0);
  const auto kinds = branches(cfg);

  Table table;
  table.columns = {"weight", "function", "x", "alpha", "beta", "p", "tau", "deviation"};
  for (auto k : kinds) table.columns.push_back(std::string("norm_") + suffix(k));
  for (const char* family : {"paper", "exact", "cerone", "dragomir", "paper_ratio",
                             "exact_ratio"}) {
    for (auto k : kinds) table.columns.push_back(std::string(family) + "_" + suffix(k));
  }

  for (const auto& w : build_weights(cfg)) {
    for (double x : cfg.xs) {
      for (const auto& c : cfg.coeffs) {
        const BoundSet s = with_context(describe(w.name(), x, c), [&] {
          return compute_bound_set(f, w, {cfg.a, cfg.b, x, c.alpha, c.beta}, p, cfg.quad);
        });
        std::vector<Cell> row = {w.name(), f.name, x, c.alpha, c.beta, p, s.tau,
                                 s.deviation};
        for (auto k : kinds) row.push_back(pick(s.norms, k));
        for (const BoundTriple* t :
             {&s.paper, &s.exact, &s.cerone, &s.dragomir, &s.paper_ratio, &s.exact_ratio}) {
          for (auto k : kinds) row.push_back(pick(*t, k));
        }
        table.add_row(std::move(row));
      }
    }
  }
  return table;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions o;
  o.quad = cfg.quad;
  o.weights = cfg.weights.empty() ? corpus::weights(cfg.a, cfg.b) : build_weights(cfg);
  if (cfg.function) o.functions = {make_function(*cfg.function)};
  if (!cfg.xs.empty()) {
    o.xs = cfg.xs;
  } else {
    for (double& x : o.xs) x = cfg.a + (cfg.b - cfg.a) * x;
  }
  if (!cfg.coeffs.empty()) o.coeffs = cfg.coeffs;
  if (cfg.p) o.ps = {*cfg.p};
  // The density corpus lives on its own fixed weights; run it only for the
  // unrestricted corpus.
  o.include_cdf = cfg.weights.empty() && !cfg.function;
  return o;
}

Table records_table(const VerifyReport& report) {
  Table table;
  table.columns = {"suite", "label", "value", "limit", "pass"};
  for (const auto& r : report.records) {
    table.add_row({std::string(to_string(r.suite)), r.label, r.value, r.limit, r.pass});
  }
  return table;
}

std::vector<AuditRow> audit_rows(const RunConfig& cfg, const std::vector<Weight>& weights) {
  return with_context("audit", [&] {
    return audit_paper_vs_exact(weights, cfg.xs, cfg.coeffs, cfg.quad);
  });
}

Table audit_report(const RunConfig& cfg) {
  const auto weights = build_weights(cfg);
  const auto rows = audit_rows(cfg, weights);
  const bool extended = cfg.format != Format::csv;

  Table table;
  table.columns = {"weight_name", "x",     "alpha", "beta", "paper_inf_factor",
                   "exact_inf_factor", "ratio", "flagged"};
  if (extended) {
    // Extra columns outside the CSV schema: the witness deviation and the
    // gap between the printed and the derived decomposition of tau, both
    // evaluated for f = exp.
    table.columns.push_back("witness_deviation");
    table.columns.push_back("printed_decomposition_gap");
  }
  const Fn1D probe = *corpus::function("exp");
  std::size_t i = 0;
  for (const auto& w : weights) {
    for (double x : cfg.xs) {
      for (const auto& c : cfg.coeffs) {
        const AuditRow& r = rows.at(i++);
        std::vector<Cell> row = {r.weight_name,      r.x,     r.alpha,  r.beta,
                                 r.paper_inf_factor, r.exact_inf_factor, r.ratio,
                                 r.flagged};
        if (extended) {
          row.push_back(r.witness_deviation);
          const TauParams tp{cfg.a, cfg.b, x, c.alpha, c.beta};
          row.push_back(with_context(describe(w.name(), x, c), [&] {
            return tau_decomposed_printed(probe, w, tp, cfg.quad) - tau(probe, w, tp, cfg.quad);
          }));
        }
        table.add_row(std::move(row));
      }
    }
  }
  return table;
}

std::string sharpness_report(const RunConfig& cfg, Table& table) {
  table.columns = {"weight_name", "kind",  "x",     "alpha",      "beta",
                   "deviation",   "bound", "ratio", "degenerate", "best"};
  const char* kind = cfg.kind == SharpnessKind::exact_inf ? "exact_inf" : "exact_one";
  std::ostringstream summary;
  for (const auto& w : build_weights(cfg)) {
    const SharpnessReport rep = with_context("sharpness, weight " + w.name(), [&] {
      return sharpness_search(w, cfg.xs, cfg.coeffs, cfg.kind, cfg.quad);
    });
    for (const auto& r : rep.rows) {
      const bool best = !r.degenerate && r.x == rep.best.x && r.alpha == rep.best.alpha &&
                        r.beta == rep.best.beta;
      table.add_row({w.name(), std::string(kind), r.x, r.alpha, r.beta, r.deviation,
                     r.bound, r.ratio, r.degenerate, best});
    }
    summary << "best ratio " << w.name() << ": " << format_number(rep.best.ratio)
            << " at x=" << format_number(rep.best.x)
            << " alpha=" << format_number(rep.best.alpha)
            << " beta=" << format_number(rep.best.beta) << '\n';
  }
  return summary.str();
}

Table cdf_report(const RunConfig& cfg) {
  const Fn1D density = make_function(*cfg.density);
  const Weight w = build_weights(cfg).front();
  const DensityModel model = with_context("density " + density.name, [&] {
    return cfg.normalize ? DensityModel::normalized(density, w, cfg.quad)
                         : DensityModel(density, w, cfg.quad);
  });
  const double p = cfg.p.value_or(2.0);
  const Coefficients c = cfg.coeffs.front();
  const bool extended = cfg.format != Format::csv;

  Table table;
  table.columns = {"x",         "F_w",     "R_w",      "lhs_31",
                   "bound_inf", "bound_p", "bound_one", "identity_residual"};
  if (cfg.with_fw_norm) table.columns.push_back("fw_norm_inf");
  if (extended) {
    for (const char* col : {"exact_inf", "exact_p", "exact_one", "lhs_33",
                            "lhs_33_printed", "bound_33_inf"}) {
      table.columns.push_back(col);
    }
  }
  const double fw_norm = cfg.with_fw_norm ? cdf_derivative_sup(model) : 0.0;
  for (double x : cfg.xs) {
    std::vector<Cell> row;
    with_context(describe(w.name(), x, c), [&] {
      const CdfBound r =
          cdf_bound_general(model, {cfg.a, cfg.b, x, c.alpha, c.beta}, p, cfg.quad);
      row = {x,           r.cdf,        reliability(model, x, cfg.quad), r.lhs,
             r.bounds.inf, r.bounds.p,  r.bounds.one,                    r.identity_residual};
      if (cfg.with_fw_norm) row.push_back(fw_norm);
      if (extended) {
        const CdfLeftBound left = cdf_bound_left(model, x, p, cfg.quad);
        row.insert(row.end(), {r.exact_bounds.inf, r.exact_bounds.p, r.exact_bounds.one,
                               left.bound.lhs, left.printed_lhs, left.bound.bounds.inf});
      }
    });
    table.add_row(std::move(row));
  }
  return table;
}

// Renders the command report into `report`; `console` receives text meant
// for the terminal even when the report goes to a file.
int produce(const RunConfig& cfg, std::ostream& report, std::ostream& console,
            bool to_file) {
  switch (cfg.command) {
    case Command::bounds:
      write_table(report, bounds_report(cfg), cfg.format);
      return kExitOk;
    case Command::verify: {
      const VerifyReport rep = run_verification(verify_options(cfg));
      if (to_file) write_table(report, records_table(rep), cfg.format);
      console << rep.summary() << '\n';
      console << "paper forms (informational): "
              << rep.failures(Suite::paper_soundness) << " of "
              << rep.count(Suite::paper_soundness) << " checks exceed the printed bound\n";
      return rep.ok() ? kExitOk : kExitFailure;
    }
    case Command::audit:
      write_table(report, audit_report(cfg), cfg.format);
      return kExitOk;
    case Command::sharpness: {
      Table table;
      const std::string summary = sharpness_report(cfg, table);
      write_table(report, table, cfg.format);
      if (cfg.format == Format::text) {
        report << '\n' << summary;
      } else if (to_file) {
        console << summary;
      }
      return kExitOk;
    }
    case Command::cdf:
      write_table(report, cdf_report(cfg), cfg.format);
      return kExitOk;
  }
  return kExitFailure;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream report;
  std::ostringstream console;
  int code = kExitFailure;
  try {
    code = produce(cfg, report, console, cfg.output.has_value());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (cfg.output) {
    std::ofstream file(*cfg.output, std::ios::binary);
    file << report.str();
    file.close();
    if (!file) {
      err << "error: cannot write " << *cfg.output << '\n';
      return kExitFailure;
    }
  } else {
    out << report.str();
  }
  out << console.str();
  return code;
}

namespace {

struct OptionSpec {
  const char* name;
  const char* help;
};

constexpr OptionSpec kValueOptions[] = {
    {"a", "left end of the interval (default 0)"},
    {"b", "right end of the interval (default 1)"},
    {"x", "evaluation point, or comma-separated points"},
    {"x-grid", "n interior points a + (b - a) k / (n + 1)"},
    {"alpha", "left coefficient (default 1)"},
    {"beta", "right coefficient (default 1)"},
    {"coeffs", "coefficient grid, e.g. 1:1,2:1"},
    {"weight", "registry weight, e.g. uniform or power:p=1:q=0"},
    {"weights", "comma-separated registry weights"},
    {"weight-expr", "weight as an expression in t"},
    {"function", "registry function name or expression in t"},
    {"density", "density as a registry name or expression in t"},
    {"p", "Lebesgue exponent p > 1 (default 2)"},
    {"norm", "report only one branch: inf, p or one"},
    {"tol", "absolute quadrature tolerance"},
    {"max-subdiv", "maximum adaptive subdivisions"},
    {"output", "write the report to this file"},
    {"format", "csv, json or text"},
    {"kind", "sharpness bound: exact_inf or exact_one"},
};

constexpr OptionSpec kFlags[] = {
    {"normalize", "rescale the density to unit weighted mass"},
    {"with-fw-norm", "add the ||f w||_inf column"},
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Ostrowski-type deviation bounds"};
  app.require_subcommand(1);

  struct Bound {
    Command command;
    CLI::App* sub;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    std::string config;
  };
  std::vector<Bound> subs;
  subs.reserve(5);
  const std::pair<Command, const char*> commands[] = {
      {Command::bounds, "tau and every bound family for one configuration grid"},
      {Command::verify, "run the identity, soundness and reduction suites"},
      {Command::audit, "compare the printed L_inf bound with the sound one"},
      {Command::sharpness, "evaluate extremal witnesses against the exact bounds"},
      {Command::cdf, "bounds on the weighted distribution function"},
  };
  for (const auto& [command, help] : commands) {
    subs.push_back({command, app.add_subcommand(to_string(command), help), {}, {}, {}});
  }
  for (auto& s : subs) {
    s.sub->add_option("--config", s.config, "JSON file of settings; flags take precedence");
    for (const auto& o : kValueOptions) {
      if (option_applies(s.command, o.name)) {
        s.sub->add_option(std::string("--") + o.name, s.values[o.name], o.help);
      }
    }
    for (const auto& f : kFlags) {
      if (option_applies(s.command, f.name)) {
        s.sub->add_flag(std::string("--") + f.name, s.flags[f.name], f.help);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto& s : subs) {
    if (!s.sub->parsed()) continue;
    try {
      nlohmann::json settings = nlohmann::json::object();
      if (!s.config.empty()) settings = load_config_file(s.config);
      for (const auto& o : kValueOptions) {
        if (option_applies(s.command, o.name) &&
            s.sub->count(std::string("--") + o.name) > 0) {
          settings[o.name] = s.values[o.name];
        }
      }
      for (const auto& f : kFlags) {
        if (option_applies(s.command, f.name) &&
            s.sub->count(std::string("--") + f.name) > 0) {
          settings[f.name] = s.flags[f.name];
        }
      }
      settings.erase("config");
      const RunConfig cfg = build_run_config(s.command, settings);
      return run_command(cfg, out, err);
    } catch (const UsageError& e) {
      err << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace obw::cli
