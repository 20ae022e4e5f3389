#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seidel {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitInfeasible = 3 };

/// Runs the seidel-forge command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace seidel
