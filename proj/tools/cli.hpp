#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdom::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kInternalError = 3 };

// Runs one command line (args excludes the program name). Payload goes to
// `out` only when the whole command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace cdom::cli
