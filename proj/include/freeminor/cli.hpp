#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Graph input comes
/// from the named files, or from `in` when none are given or a name is "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fm
