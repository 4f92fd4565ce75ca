#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strtop::cli {

/// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one command. `args` excludes the program name. The JSON result goes
/// to the --out file when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strtop::cli
