#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gstirling {

// Exit codes: 0 success, 1 cross-check disagreement, 2 input error,
// 3 resource cap exceeded, 4 domain error (e.g. not quasi-threshold).
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitDomain = 4;

// Runs one CLI invocation; args excludes the program name. JSON and data go
// to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gstirling
