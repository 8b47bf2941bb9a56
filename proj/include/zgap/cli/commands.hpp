#pragma once

#include <ostream>
#include <span>
#include <string>

namespace zgap::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNumerical = 3,
  kExitOracle = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to --out), diagnostics and progress to `err`.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Full help text: every command and flag with its domain.
std::string help_text();

}  // namespace zgap::cli
