#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c1p::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotC1P = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c1p::cli
