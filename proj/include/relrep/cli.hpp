#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relrep {

// Exit codes shared by every subcommand.
enum ExitCode : int { kVerdict = 0, kNegative = 1, kUsage = 2, kInconclusive = 3 };

// Runs one command line (without the program name). `in` backs every `-`
// argument and the interactive game.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace relrep
