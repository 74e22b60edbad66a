#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hedetniemi {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitUsage = 2,
  kExitExhausted = 3,
};

/// Runs one `hedet` invocation. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hedetniemi
