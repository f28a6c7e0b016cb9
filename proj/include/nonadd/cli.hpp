#pragma once

#include <iosfwd>

namespace nonadd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nonadd::cli
