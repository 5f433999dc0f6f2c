#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brieskorn::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kMismatch = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace brieskorn::cli
