#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grothpd::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grothpd::cli
