#include "obw/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "obw/error.hpp"

namespace obw {

namespace {

constexpr int kChebyshevNodes = 1024;
constexpr int kRefinedBrackets = 8;
constexpr double kRefineTol = 1e-12;

double abs_checked(const RealFn& g, double t) {
  const double v = g(t);
  if (!std::isfinite(v)) {
    throw DomainError("norm: non-finite value at t = " + std::to_string(t));
  }
  return std::abs(v);
}

// Golden-section search for the maximum of |g| on [lo, hi].
double golden_max(const RealFn& g, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = abs_checked(g, x1);
  double f2 = abs_checked(g, x2);
  double best = std::max(f1, f2);
  while (hi - lo > kRefineTol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = abs_checked(g, x1);
      best = std::max(best, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = abs_checked(g, x2);
      best = std::max(best, f2);
    }
  }
  return best;
}

}  // namespace

const char* to_string(NormKind kind) {
  switch (kind) {
    case NormKind::inf:
      return "inf";
    case NormKind::p:
      return "p";
    case NormKind::one:
      return "one";
  }
  return "?";
}

double norm_inf(const RealFn& g, double c, double d) {
  if (c > d) std::swap(c, d);
  if (c == d) return abs_checked(g, c);

  const double mid = 0.5 * (c + d);
  const double half = 0.5 * (d - c);
  std::vector<double> nodes(kChebyshevNodes);
  std::vector<double> values(kChebyshevNodes);
  for (int k = 0; k < kChebyshevNodes; ++k) {
    nodes[k] = mid - half * std::cos(std::numbers::pi * k / (kChebyshevNodes - 1));
    values[k] = abs_checked(g, nodes[k]);
  }
  nodes.front() = c;
  nodes.back() = d;

  std::vector<int> order(kChebyshevNodes);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&values](int i, int j) { return values[i] > values[j]; });

  double best = values[order.front()];
  for (int r = 0; r < kRefinedBrackets; ++r) {
    const int k = order[r];
    const double lo = nodes[std::max(k - 1, 0)];
    const double hi = nodes[std::min(k + 1, kChebyshevNodes - 1)];
    best = std::max(best, golden_max(g, lo, hi));
  }
  return best;
}

double norm_p(const RealFn& g, double p, double c, double d,
              std::span<const double> breakpoints, const QuadConfig& cfg) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError("norm_p needs a finite exponent p >= 1");
  }
  if (c > d) std::swap(c, d);
  const auto integrand = [&g, p](double t) {
    const double v = std::abs(g(t));
    return p == 1.0 ? v : std::pow(v, p);
  };
  const double total = integrate(integrand, c, d, breakpoints, cfg).value;
  return std::pow(std::max(total, 0.0), 1.0 / p);
}

NormValue make_norm(NormKind kind, const RealFn& g, double c, double d, double p,
                    const QuadConfig& cfg) {
  NormValue n{kind, kind == NormKind::p ? p : 0.0, 0.0, c, d};
  switch (kind) {
    case NormKind::inf:
      n.value = norm_inf(g, c, d);
      break;
    case NormKind::p:
      if (!(p > 1.0)) throw DomainError("p-norm needs p > 1");
      n.value = norm_p(g, p, c, d, {}, cfg);
      break;
    case NormKind::one:
      n.exponent = 1.0;
      n.value = norm_p(g, 1.0, c, d, {}, cfg);
      break;
  }
  return n;
}

NormTriple norm_triple(const RealFn& g, double c, double d, double p,
                       std::span<const double> breakpoints, const QuadConfig& cfg) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("the middle bound branch needs a finite p > 1");
  }
  NormTriple n;
  n.p = p;
  n.inf = norm_inf(g, c, d);
  n.p_norm = norm_p(g, p, c, d, breakpoints, cfg);
  n.one = norm_p(g, 1.0, c, d, breakpoints, cfg);
  return n;
}

}  // namespace obw
