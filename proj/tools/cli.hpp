#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigidx::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kBoundFailed = 2;

/// Runs one invocation. args excludes the program name. Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigidx::cli
