#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evdkit::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kDataError = 3, kNumericalFailure = 4 };

/// Runs one command line in-process. `args` excludes the program name.
/// Reports go to `out`, diagnostics and text-mode warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evdkit::cli
