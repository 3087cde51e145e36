#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seqgame {

enum ExitCode : int { kOk = 0, kParseError = 1, kFormError = 2, kMismatch = 3 };

/// Runs the command line tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqgame
