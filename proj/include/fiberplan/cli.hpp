#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiberplan {

enum ExitCode : int {
    kExitPass = 0,
    kExitComplianceFailure = 1,
    kExitInputError = 2,
};

/// Runs the command line tool. `args` excludes the program name. Reports go
/// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiberplan
