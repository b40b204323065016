#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linkred::cli {

enum ExitCode : int {
  kSuccess = 0,        // also "YES"
  kNo = 1,
  kUsage = 2,
  kDisagreement = 3,   // the link route and the graph oracle gave different answers
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkred::cli
