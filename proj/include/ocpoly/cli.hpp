#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ocpoly {

// Exit codes of run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. A `verify` run with a failing assertion exits 1.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocpoly
