#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratwitt {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPropertyFailure = 2 };

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratwitt
