#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathpart {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // NO answer or invalid certificate
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitGenerator = 5;

// args excludes the program name. Output documents go to out, diagnostics
// to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathpart
