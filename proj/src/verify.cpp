#include "obw/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "obw/error.hpp"

namespace obw {

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::identity: return "identity";
    case Suite::soundness: return "soundness";
    case Suite::reductions: return "reductions";
    case Suite::paper_soundness: return "paper_soundness";
  }
  return "?";
}

int VerifyReport::failures(Suite suite) const {
  int n = 0;
  for (const auto& r : records) n += (r.suite == suite && !r.pass) ? 1 : 0;
  return n;
}

int VerifyReport::count(Suite suite) const {
  int n = 0;
  for (const auto& r : records) n += r.suite == suite ? 1 : 0;
  return n;
}

bool VerifyReport::ok() const {
  return failures(Suite::identity) == 0 && failures(Suite::soundness) == 0 &&
         failures(Suite::reductions) == 0;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "identity: " << failures(Suite::identity)
     << " failures, soundness: " << failures(Suite::soundness)
     << " failures, reductions: " << failures(Suite::reductions) << " failures";
  return os.str();
}

namespace {

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string config_label(const std::string& f, const Weight& w, double x,
                         const Coefficients& c) {
  return f + "/" + w.name() + "/x=" + fmt_num(x) + "/alpha=" + fmt_num(c.alpha) +
         "/beta=" + fmt_num(c.beta);
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  // Runs `measure` and records |value| <= limit. A library error becomes a
  // failed record so one bad configuration does not abort the sweep.
  void within(Suite suite, const std::string& label, double limit,
              const std::function<double()>& measure) {
    CheckRecord r{suite, label, 0.0, limit, false};
    try {
      r.value = measure();
      r.pass = std::abs(r.value) <= limit;
    } catch (const Error& e) {
      r.label += " [error: " + std::string(e.what()) + "]";
      r.value = std::numeric_limits<double>::quiet_NaN();
    }
    report_.records.push_back(std::move(r));
  }

  // Records deviation <= bound * (1 + rel) with value = deviation / bound.
  void dominated(Suite suite, const std::string& label, double deviation, double bound,
                 double rel) {
    CheckRecord r{suite, label, bound_ratio(deviation, bound), 1.0 + rel, false};
    r.pass = deviation <= bound * (1.0 + rel) + 1e-15;
    report_.records.push_back(std::move(r));
  }

  void failed(Suite suite, const std::string& label, const Error& e) {
    report_.records.push_back({suite, label + " [error: " + e.what() + "]",
                               std::numeric_limits<double>::quiet_NaN(), 0.0, false});
  }

 private:
  VerifyReport& report_;
};

void identity_and_soundness(const VerifyOptions& o, Recorder& rec) {
  for (const auto& f : o.functions) {
    for (const auto& w : o.weights) {
      for (double x : o.xs) {
        for (const auto& c : o.coeffs) {
          const TauParams tp{w.a(), w.b(), x, c.alpha, c.beta};
          const std::string label = config_label(f.name, w, x, c);
          rec.within(Suite::identity, "kernel-identity/" + label, o.identity_tol,
                     [&] { return identity_residual(f, tp, w, o.quad); });
          rec.within(Suite::identity, "tau-vs-combination/" + label, o.forms_tol, [&] {
            return tau(f, w, tp, o.quad) - tau_combination(f, w, tp, o.quad);
          });
          rec.within(Suite::identity, "tau-vs-decomposed/" + label, o.forms_tol, [&] {
            return tau(f, w, tp, o.quad) - tau_decomposed(f, w, tp, o.quad);
          });
          for (double p : o.ps) {
            const std::string plabel = label + "/p=" + fmt_num(p);
            try {
              const BoundSet s = compute_bound_set(f, w, tp, p, o.quad);
              rec.dominated(Suite::soundness, "exact-inf/" + plabel, s.deviation,
                            s.exact.inf, o.soundness_rel_tol);
              rec.dominated(Suite::soundness, "exact-p/" + plabel, s.deviation, s.exact.p,
                            o.soundness_rel_tol);
              rec.dominated(Suite::soundness, "exact-one/" + plabel, s.deviation,
                            s.exact.one, o.soundness_rel_tol);
              rec.dominated(Suite::paper_soundness, "paper-inf/" + plabel, s.deviation,
                            s.paper.inf, o.soundness_rel_tol);
              rec.dominated(Suite::paper_soundness, "paper-p/" + plabel, s.deviation,
                            s.paper.p, o.soundness_rel_tol);
              rec.dominated(Suite::paper_soundness, "paper-one/" + plabel, s.deviation,
                            s.paper.one, o.soundness_rel_tol);
            } catch (const Error& e) {
              rec.failed(Suite::soundness, "bound-set/" + plabel, e);
            }
          }
        }
      }
    }
  }
}

void reductions(const VerifyOptions& o, Recorder& rec) {
  NormTriple unit;
  unit.inf = unit.p_norm = unit.one = 1.0;
  const std::vector<Coefficients> pairs = {{1, 1}, {2, 1}, {1, 3}, {3, 5}};

  for (const auto& [a, b] : {std::pair{0.0, 1.0}, std::pair{-1.0, 2.0}}) {
    const Weight uniform = builtin_weight({"uniform", {}}, a, b);
    for (int k = 1; k <= 9; ++k) {
      const double x = a + (b - a) * k / 10.0;
      for (const auto& c : pairs) {
        for (double p : o.ps) {
          unit.p = p;
          const std::string label = "[" + fmt_num(a) + "," + fmt_num(b) + "]/x=" +
                                    fmt_num(x) + "/alpha=" + fmt_num(c.alpha) +
                                    "/beta=" + fmt_num(c.beta) + "/p=" + fmt_num(p);
          const TauParams tp{a, b, x, c.alpha, c.beta};
          BoundTriple paper, cerone;
          try {
            paper = bounds_paper(tp, uniform, unit, o.quad);
            cerone = bounds_cerone(x, c.alpha, c.beta, a, b, unit);
          } catch (const Error& e) {
            rec.failed(Suite::reductions, "cerone/" + label, e);
            continue;
          }
          rec.within(Suite::reductions, "cerone-inf/" + label, o.reduction_tol,
                     [&] { return paper.inf - cerone.inf; });
          rec.within(Suite::reductions, "cerone-p/" + label, o.reduction_tol,
                     [&] { return paper.p - cerone.p; });
          rec.within(Suite::reductions, "cerone-one/" + label, o.reduction_tol,
                     [&] { return paper.one - cerone.one; });
        }
      }
      // Montgomery kernel: (b - a) rho(x, t) = P(x, t) for alpha = x - a,
      // beta = b - x and uniform weight.
      rec.within(Suite::reductions, "montgomery/[" + fmt_num(a) + "," + fmt_num(b) +
                                        "]/x=" + fmt_num(x),
                 o.reduction_tol, [&] {
                   const PeanoKernel rho({a, b, x, x - a, b - x}, uniform, o.quad);
                   double worst = 0.0;
                   for (int j = 0; j <= 40; ++j) {
                     const double t = a + (b - a) * j / 40.0;
                     worst = std::max(worst, std::abs((b - a) * rho(t) -
                                                      montgomery_kernel(x, t, a, b)));
                   }
                   return worst;
                 });
    }
    const double mid = 0.5 * (a + b);
    const Fn1D f = corpus::functions().at(1);
    rec.within(Suite::reductions,
               "midpoint-dragomir/[" + fmt_num(a) + "," + fmt_num(b) + "]",
               o.reduction_tol, [&] {
                 const auto cor = corollary_bounds(CorollaryMode::midpoint_equal, f,
                                                   uniform, a, b, 2.0, 0.0, 1.0, 1.0,
                                                   o.quad);
                 const std::array<double, 1> split{mid};
                 const NormTriple n =
                     norm_triple(derivative_fn(f, a, b), a, b, 2.0, split, o.quad);
                 return cor.bounds.inf - bounds_dragomir(mid, a, b, n).inf;
               });
  }

  // Corollary forms against the general bound under the same substitution.
  for (const auto& w : o.weights) {
    const Fn1D& f = o.functions.front();
    const double a = w.a();
    const double b = w.b();
    const std::array<double, 1> split{0.5 * (a + b)};
    for (double x : o.xs) {
      const std::string label = w.name() + "/x=" + fmt_num(x);
      rec.within(Suite::reductions, "corollary-equal/" + label, o.reduction_tol, [&] {
        const auto cor = corollary_bounds(CorollaryMode::equal_coeffs, f, w, a, b, 2.0, x,
                                          1.0, 1.0, o.quad);
        const std::array<double, 1> sx{x};
        const NormTriple n = norm_triple(derivative_fn(f, a, b), a, b, 2.0, sx, o.quad);
        const BoundTriple g = bounds_paper({a, b, x, 1.0, 1.0}, w, n, o.quad);
        return std::max({std::abs(cor.bounds.inf - g.inf), std::abs(cor.bounds.p - g.p),
                         std::abs(cor.bounds.one - g.one)});
      });
    }
    rec.within(Suite::reductions, "corollary-midpoint/" + w.name(), o.reduction_tol, [&] {
      const auto cor = corollary_bounds(CorollaryMode::midpoint, f, w, a, b, 2.0, 0.0,
                                        2.0, 1.0, o.quad);
      const NormTriple n = norm_triple(derivative_fn(f, a, b), a, b, 2.0, split, o.quad);
      const BoundTriple g = bounds_paper({a, b, 0.5 * (a + b), 2.0, 1.0}, w, n, o.quad);
      return std::max({std::abs(cor.bounds.inf - g.inf), std::abs(cor.bounds.p - g.p),
                       std::abs(cor.bounds.one - g.one)});
    });
  }
}

void cdf_checks(const VerifyOptions& o, Recorder& rec) {
  for (const auto& model : corpus::density_models()) {
    const std::string name = model.density().name + "/" + model.weight().name();
    rec.within(Suite::identity, "expectation/" + name, o.expectation_tol,
               [&] { return expectation_identity_check(model, o.quad); });
    for (double x : o.xs) {
      for (const auto& c : o.coeffs) {
        const TauParams tp{model.a(), model.b(), x, c.alpha, c.beta};
        const std::string label = name + "/x=" + fmt_num(x) + "/alpha=" +
                                  fmt_num(c.alpha) + "/beta=" + fmt_num(c.beta);
        try {
          const CdfBound r = cdf_bound_general(model, tp, 2.0, o.quad);
          rec.within(Suite::identity, "cdf-algebra/" + label, o.cdf_algebra_tol,
                     [&] { return r.identity_residual; });
          rec.dominated(Suite::soundness, "cdf-exact-inf/" + label, r.lhs,
                        r.exact_bounds.inf, o.soundness_rel_tol);
          rec.dominated(Suite::soundness, "cdf-exact-p/" + label, r.lhs,
                        r.exact_bounds.p, o.soundness_rel_tol);
          rec.dominated(Suite::soundness, "cdf-exact-one/" + label, r.lhs,
                        r.exact_bounds.one, o.soundness_rel_tol);
        } catch (const Error& e) {
          rec.failed(Suite::identity, "cdf/" + label, e);
        }
      }
    }
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Recorder rec(report);
  identity_and_soundness(options, rec);
  reductions(options, rec);
  if (options.include_cdf) cdf_checks(options, rec);
  return report;
}

}  // namespace obw
