#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lhsolve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (program name first) and runs the chosen subcommand.
/// Results go to `out`, diagnostics to `err`; returns the exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace lhsolve::cli
