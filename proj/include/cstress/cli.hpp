#pragma once
// Batch entry point. Exit codes: 0 all contracts hold, 1 contract violation, 2 bad config or usage.

#include <iosfwd>

namespace cstress::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContract = 1;
inline constexpr int kExitConfig = 2;

// Structured output goes to --out, or to `out` when no path is given; the human summary
// then goes to `err` so that `out` stays machine readable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cstress::cli
