#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cli {

// Parses and executes one command line (without the program name).
// Normal output goes to `out`, diagnostics to `err`. Returns the process
// exit code: 0 success, 2 invalid input, 3 not a rational homology sphere,
// 4 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
