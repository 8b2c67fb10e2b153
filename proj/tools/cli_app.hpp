#pragma once

#include <cstddef>
#include <ostream>
#include <string_view>

#include "divtop/checks.hpp"

namespace divtop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpectedVerdict = 1;
inline constexpr int kExitUsage = 2;

/// Whether a check verdict matches what the theorems predict for a ring with
/// these capabilities and this many isolated fragment points.
bool verdict_expected(std::string_view prop, const AdapterCapabilities& caps, std::size_t isolated_points,
                      Verdict verdict);

/// Subcommands: fragment, check, primes. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace divtop::cli
