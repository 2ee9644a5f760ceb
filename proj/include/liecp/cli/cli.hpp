#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liecp::cli {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 verified positive, 1 verified negative, 2 usage or library error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecp::cli
