#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bwlf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Results go to
/// `out`, warnings and errors to `err`. Files written by a failing run are
/// removed before returning.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bwlf::cli
