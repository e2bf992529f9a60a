#pragma once

#include <iosfwd>

namespace dsw::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;            // bad flags, unreadable or invalid spec
inline constexpr int kThinBarrier = 3;      // first-order expansion not trustworthy
inline constexpr int kNotSymmetric = 4;
inline constexpr int kLevelNotFound = 5;    // oracle could not isolate a level
inline constexpr int kUnwritable = 6;
inline constexpr int kGoldenMismatch = 7;

/// Entry point of the `dsw` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsw::cli
