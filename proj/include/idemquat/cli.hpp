#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idemquat::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCapExceeded = 3,
  kVerificationFailed = 4,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idemquat::cli
