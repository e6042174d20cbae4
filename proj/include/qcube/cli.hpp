#pragma once

#include <string>
#include <vector>

namespace qcube {

/// Runs the qcube command line on `args` (without the program name).
/// Exit codes: 0 success, 1 at least one verification failure, 2 usage or
/// IO error.
int run_cli(std::vector<std::string> args);

}  // namespace qcube
