#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool on `args` (program name excluded). Reports go to `out`,
// diagnostics to `err`; "-" as an input path reads from `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace bohr
