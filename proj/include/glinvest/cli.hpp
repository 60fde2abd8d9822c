#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace glinvest {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs the command line. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on domain/contract/parse
/// errors, 2 on usage errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace glinvest
