#pragma once

#include <iosfwd>

namespace butson {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFalse = 1, kExitUsage = 2, kExitNumeric = 3 };

/// Runs the `butson` command line with the given arguments (argv[0] is the
/// program name). Matrices named `-` are read from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace butson
