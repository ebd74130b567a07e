#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kring::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUndecided = 2;

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kring::cli
