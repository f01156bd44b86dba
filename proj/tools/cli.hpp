#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqdeg::cli {

/// Exit codes.
inline constexpr int kOk = 0;        // success, or something was found
inline constexpr int kNegative = 1;  // clean negative answer
inline constexpr int kUsage = 2;     // bad flags, unreadable input, size limits
inline constexpr int kInternal = 3;  // a checked statement failed

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`
/// (or the --out file), diagnostics to `err`.
auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int;

} // namespace eqdeg::cli
