#ifndef LCOAL_CLI_CLI_HPP
#define LCOAL_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lcoal::cli
{

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input = 2;

// Runs the command line `args` (without the program name) and returns the exit code.
// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace lcoal::cli

#endif  // LCOAL_CLI_CLI_HPP
