#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rhombus::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

// Default cap on generated rows; full retention costs ~width^2/8 bytes.
inline constexpr std::int64_t kDefaultRowCap = std::int64_t{1} << 20;

// Dispatches gen | render | seq | verify | diag | oeis. args excludes
// the program name. JSON mode output is byte-identical across runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhombus::cli
