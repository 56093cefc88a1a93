#ifndef CURLED_TOOLS_CLI_HPP
#define CURLED_TOOLS_CLI_HPP

#include <iosfwd>

namespace curled::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;      // a check or the harness found a failure
inline constexpr int kExitUsage = 2;       // bad flags, malformed input, I/O failure
inline constexpr int kExitBadField = 3;    // field validation of an algebra file

/// Runs the command line and returns the process exit code. Nothing is
/// written to the streams until the command's work has finished.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curled::cli

#endif  // CURLED_TOOLS_CLI_HPP
