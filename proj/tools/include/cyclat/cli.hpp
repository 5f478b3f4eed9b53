#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclat::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kBadInput = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclat::cli
