#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lusztig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;  // also: verify found mismatches
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Regular output goes
/// to `out` (or the --out file), usage text and JSON errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lusztig::cli
