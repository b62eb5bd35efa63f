#pragma once

#include <iosfwd>

namespace gowers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one subcommand. Returns 0 on success, 1 when a
/// verification fails, 2 on usage or input-format errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gowers::cli
