#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qillum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command. args excludes the program name. Data goes to out
/// (unless --out names a file), diagnostics to err.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qillum::cli
