#pragma once

#include <ostream>

namespace nssbound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
/// A result contradicts the 1/4 ceiling or a verification suite failed.
inline constexpr int kExitViolation = 2;

/// Command-line entry point; CSV goes to --out ("-" for `out`), summaries
/// to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nssbound
