#pragma once

#include <ostream>

namespace iewds::cli {

// Exit codes of the iewds tool.
inline constexpr int kOk = 0;
inline constexpr int kDivergence = 1;  // oracle disagreement or internal error
inline constexpr int kParse = 2;       // bad arguments, unreadable or invalid game, bad sequence file
inline constexpr int kPrecondition = 3;
inline constexpr int kCap = 4;

// Runs the tool with argv-style arguments (argv[0] is the program name).
// Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iewds::cli
