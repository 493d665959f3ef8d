// The cadorder command line, callable in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cadorder::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kInvariant = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cadorder::cli
