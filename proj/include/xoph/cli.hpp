#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xoph::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kNotStabilizer = 2,
  kInternalError = 3,
  kUsage = 64,
};

/// Runs `xoph <args...>` writing results to out and diagnostics to err.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xoph::cli
