#pragma once

#include <iosfwd>

namespace staymap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

/// Entry point of the `staymap` tool with its streams injected. An INPUT of
/// "-" reads from `in`. Documents go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace staymap::cli
