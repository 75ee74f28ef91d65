#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootsuper::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootsuper::cli
