#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wicks::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;  // invalid word, failed verification
inline constexpr int kUsage = 2;     // bad arguments, parse errors, capacity limits
inline constexpr int kInternal = 3;  // a consistency check inside the library failed

// Runs the `wicks` command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wicks::cli
