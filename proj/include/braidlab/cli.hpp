#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args[0]` is the program name. Results go to
/// `out`, diagnostics to `err`; `in` backs --stdin.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace braidlab::cli
