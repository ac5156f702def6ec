#pragma once

#include <ostream>

namespace lct::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_selftest_failure = 1,
    exit_parse_error = 2,
    exit_precondition = 3,
    exit_irrational_center = 4,
    exit_internal = 5,
};

/// Runs the command line `argv` and writes the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lct::cli
