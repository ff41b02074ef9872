#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinalg {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a check or crosscheck failed
inline constexpr int kExitUsage = 2;    // bad arguments or unparsable expression
inline constexpr int kExitIo = 3;

/// Runs the tool with args (without the program name). Reports and results go
/// to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinalg
