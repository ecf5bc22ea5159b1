#pragma once

#include <ostream>

namespace dcodes {

/// Exit codes of the command-line tool.
enum ExitCode : int { kAllPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

/// Runs the `designcodes` command line. Output goes to `out`, diagnostics to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcodes
