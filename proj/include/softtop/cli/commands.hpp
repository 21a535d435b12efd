#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace softtop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns 0 when every
/// check passes, 1 when a check fails and 2 on usage or document errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softtop::cli
