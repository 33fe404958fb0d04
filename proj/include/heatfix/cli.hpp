#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heatfix::cli {

/// Runs one subcommand. `args` excludes the program name. Returns the
/// process exit code: 0 ok, 2 input, 3 parameter, 4 dimensions, 5 degenerate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heatfix::cli
