#pragma once

#include <iosfwd>

namespace a2l2::cli {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Runs the a2l2 command line; all output goes to out/err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace a2l2::cli
