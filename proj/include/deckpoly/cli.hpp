#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deckpoly::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFamily = 3;
inline constexpr int kExitInconsistent = 4;
inline constexpr int kExitViolated = 5;

// Runs one invocation. args excludes the program name. Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deckpoly::cli
