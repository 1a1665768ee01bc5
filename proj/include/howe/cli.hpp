#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace howe {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitParse = 2,
    kExitDomain = 3,
    kExitMismatch = 4,
    kExitStructure = 5,
};

/// Runs the tool on `args` (without the program name). JSON and listings go
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace howe
