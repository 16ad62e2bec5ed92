#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fieldclique::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInvalidConfig = 2 };

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fieldclique::cli
