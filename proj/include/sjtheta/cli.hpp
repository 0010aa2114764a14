#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sjtheta::cli {

enum ExitCode : int { kPass = 0, kInputError = 2, kNumericFailure = 3, kPropertyViolation = 4 };

/// Runs the command line `sjtheta <args...>` (args excludes the program
/// name). JSON goes to `out`, the human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace sjtheta::cli
