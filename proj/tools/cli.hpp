#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skolem::cli {

// Exit-code contract of the skolem tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_rejected = 1;
inline constexpr int exit_not_covered = 2;
inline constexpr int exit_search_exhausted = 3;
inline constexpr int exit_invalid_input = 4;

/// Runs one command line (args excludes the program name). Always returns
/// one of the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skolem::cli
