#pragma once

#include <ostream>

namespace gpc::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

// Runs one gpc subcommand. Output files are written relative to the working
// directory; human-readable summaries go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpc::cli
