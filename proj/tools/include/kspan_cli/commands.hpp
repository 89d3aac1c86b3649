#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kspan::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification failed, input not k-connected, bound broken
  kExitUsage = 2,    // bad flags, unreadable or malformed files
};

/// Runs `kspan <args...>` (args excludes the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kspan::cli
