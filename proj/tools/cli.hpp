#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zsdl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs one zsdl subcommand. args excludes the program name.
/// Returns 0 on success, 1 when a counterexample (or violated trim contract)
/// was found, 2 on usage or input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsdl
