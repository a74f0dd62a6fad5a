#pragma once

#include <ostream>

namespace rsd::cli {

// Exit codes: 0 success, 1 input or validation error, 2 a checked
// inequality failed beyond tolerance.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitAssertion = 2;

// Parses argv and runs one subcommand. Results go to `out` (or to --out),
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rsd::cli
