#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace belcond {

// Runs the command-line front end on the given argument list (without the
// program name), writing results to `out` and diagnostics to `err`.
// Returns the process exit code: 0 on success, 1 on input/parse problems,
// 2 on domain errors (failed operator preconditions).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace belcond
