#pragma once

namespace repring::cli {

/// Parses and executes one command line. Returns the process exit code:
/// 0 on success, 1 when a verifying subcommand finds a mismatch, 2 on
/// input or usage errors (with a one-line diagnostic on stderr).
int run(int argc, const char* const* argv);

}  // namespace repring::cli
