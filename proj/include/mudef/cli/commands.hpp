#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mudef/cli/config.hpp"

namespace mudef::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  ///< an asserted check did not hold
  kExitUsage = 2,
  kExitEvaluation = 3,  ///< a numerical evaluation failed outright
};

/// Runs one command; reports go to out (and to cfg.out), diagnostics to err.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parses args (without the program name) and runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mudef::cli
