#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ntw {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitDeficit = 1,  // verification deficit, truncated run, or candidates present
    kExitUsage = 2,    // unparsable arguments, invalid range, domain error
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ntw
