#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclemod::cli {

/// Exit codes: 0 success, 1 a checked property failed, 2 bad input.
enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclemod::cli
