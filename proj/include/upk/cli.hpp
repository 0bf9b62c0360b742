#pragma once

#include <iosfwd>

namespace upk {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitFlags = 3;

// Entry point of the `upk` tool, with the streams injected for testing.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace upk
