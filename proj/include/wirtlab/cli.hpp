#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wirtlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;        // validation error or a failed check
inline constexpr int kResourceLimit = 2;

// Runs one command line (without the program name). Reports go to `out`
// (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wirtlab::cli
