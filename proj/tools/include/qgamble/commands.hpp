#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgamble::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one qgamble command. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qgamble::cli
