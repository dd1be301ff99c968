#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sylow::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylow::cli
