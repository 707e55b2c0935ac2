#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relengine {

/// Runs the command-line front end on `args` (without the program name).
/// Returns the process exit code: 0 success, 2 validation error, 3 empty
/// result (no engine window anywhere in the grid), 1 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace relengine
