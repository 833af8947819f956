#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freeprod::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;         // counterexample found or --expect not met
inline constexpr int kUsage = 2;      // bad flags, spec, expression or lemma id
inline constexpr int kResource = 3;   // budget or 64-bit range exceeded
inline constexpr int kInternal = 4;   // integrity check failed

// Runs one subcommand. args[0] is the program name. Every report and error
// is written to out as JSON (one document per line).
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace freeprod::cli
