#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcob::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 2 for bad input, 3 when two internal computations disagree.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcob::cli
