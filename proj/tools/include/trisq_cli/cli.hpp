#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. args excludes the program name. Regular output goes
/// to out unless --output names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisq::cli
