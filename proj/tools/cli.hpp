#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gp::cli {

enum ExitCode : int { kDecided = 0, kNegative = 1, kUnknown = 2, kUsage = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gp::cli
