#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace satrank::cli {

enum ExitCode : int {
  kOk = 0,
  /// A cross-check or acceptance criterion disagreed.
  kMismatch = 1,
  kPrecondition = 2,
  kBudget = 3,
  kUsage = 64,
  kBadInput = 65,
  kInternal = 70,
};

/// Runs one subcommand; args exclude the program name. Reports go to out (or
/// the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satrank::cli
