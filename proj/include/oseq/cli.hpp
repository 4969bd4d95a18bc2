#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oseq::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kIoFailure = 3,
  kOverflow = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oseq::cli
