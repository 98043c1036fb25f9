#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hypersum::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
};

/// Runs one command line (without the program name). Results go to out; the
/// one-line failure reason goes to err, and also to out as JSON under --output json.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hypersum::cli
