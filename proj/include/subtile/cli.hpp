#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subtile {

/// Exit codes: 0 success / consistent, 1 usage or input error, 2 a check failed.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_inconsistent = 2;

/// Runs the command line (without the program name), writing reports to `out`
/// and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subtile
