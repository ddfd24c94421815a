#pragma once

#include <iosfwd>

namespace goodlab::cli {

/// Exit codes: 0 success, 1 validation or usage error, 2 inconclusive or
/// over budget.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInconclusive = 2;

/// Entry point of the `goodlab` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace goodlab::cli
