#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pebbling::cli {

enum ExitCode : int {
  kOk = 0,          // solvable, verified, or value computed
  kNegative = 1,    // unsolvable or invalid certificate
  kUsage = 2,       // usage or format error
  kBudget = 3,      // node/state/config cap reached
};

// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pebbling::cli
