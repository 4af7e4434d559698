#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsa::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsa::cli
