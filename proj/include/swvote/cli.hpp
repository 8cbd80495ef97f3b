#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swvote {

// Exit codes: 0 success, 1 oracle/closed-form mismatch, 2 input error,
// 3 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

/// Runs the command-line driver on the given arguments (without the
/// program name) and returns the process exit code.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace swvote
