#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). All regular output
// goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simperm::cli
