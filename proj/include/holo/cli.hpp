#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitDomainError = 2;

/// Runs one subcommand. `args` excludes the program name. Result JSON goes to
/// `out`, human-readable diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holo::cli
