#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypersurf::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Payload goes to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersurf::cli
