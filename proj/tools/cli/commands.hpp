#pragma once

#include <ostream>

#include "run_config.hpp"

namespace obw::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs a validated configuration. The report goes to cfg.output when set,
// otherwise to `out`. Computation errors are reported on `err`.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line entry point: parses argv, merges --config, runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace obw::cli
