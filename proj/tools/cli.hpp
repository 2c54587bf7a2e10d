#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Returns 0 when all checks pass, 1 when a law
// violation was found, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omkit::cli
