#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgecolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one `edgecolor` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

bool debug_from_env();

}  // namespace edgecolor::cli
