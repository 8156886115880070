#pragma once

#include <iosfwd>

namespace cellkit::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kDomainError = 3,
  kCacheError = 4,
};

/// Runs one command line. Results go to `out`; diagnostics and progress go
/// to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cellkit::cli
