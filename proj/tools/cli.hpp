#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnw::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kResourceCap = 3 };

/// Runs the pnw command line with args (args[0] is the program name).
/// Words and reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnw::cli
