#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aprime::cli {

enum ExitCode : int { Ok = 0, ValidationFailure = 1, ViolationFound = 2, UsageOrIo = 3 };

/// The whole command-line surface; main() only forwards to this.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace aprime::cli
