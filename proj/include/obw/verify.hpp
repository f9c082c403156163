#pragma once

/// Corpus-wide checks of the identity, the equivalent forms of tau, the
/// soundness of the Hoelder bounds and the reductions to the unweighted
/// results.

#include <string>
#include <vector>

#include "obw/corpus.hpp"

namespace obw {

struct VerifyOptions {
  std::vector<Weight> weights = corpus::weights();
  std::vector<Fn1D> functions = corpus::functions();
  std::vector<double> xs = corpus::x_values();
  std::vector<Coefficients> coeffs = corpus::coefficient_pairs();
  std::vector<double> ps = {1.5, 2.0, 3.0};
  bool include_cdf = true;
  QuadConfig quad = default_quad_config();

  double identity_tol = 1e-8;
  double forms_tol = 1e-10;
  double soundness_rel_tol = 1e-9;
  double reduction_tol = 1e-12;
  double cdf_algebra_tol = 1e-10;
  double expectation_tol = 1e-8;
};

enum class Suite { identity, soundness, reductions, paper_soundness };

const char* to_string(Suite suite);

struct CheckRecord {
  Suite suite = Suite::identity;
  std::string label;  // which check and configuration
  double value = 0.0;  // measured discrepancy (or |tau| / bound for soundness)
  double limit = 0.0;
  bool pass = true;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  int failures(Suite suite) const;
  int count(Suite suite) const;
  /// True when identity, soundness and reductions have no failures.
  /// paper_soundness is informational.
  bool ok() const;
  /// "identity: N failures, soundness: N failures, reductions: N failures".
  std::string summary() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace obw
