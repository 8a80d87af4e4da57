#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tzdyn::cli {

// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

// Parses args (without the program name), dispatches to the toeplitz, orbit,
// saturation and ndfinite subcommands and writes the report to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tzdyn::cli
