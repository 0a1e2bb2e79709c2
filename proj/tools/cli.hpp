#pragma once

// Command-line front end. Kept as a library so tests can drive it with
// in-memory streams.

#include <iosfwd>

namespace cswitch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Parses argv, runs one subcommand, writes results to `out` (or --out) and
/// diagnostics to `err`. Returns 0 only when every verification flag passes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cswitch::cli
