#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibra::cli {

inline constexpr const char* kToolName = "fibra";
inline constexpr const char* kVersion = "0.1.0";

// Parse and execute one command line (program name excluded). Exit codes:
// 0 success / all comparisons match, 1 a closed-vs-oracle comparison
// mismatched, 2 usage or domain error, 3 resource or overflow error. Errors
// print a single machine-parsable line `error: <kind>: <message>` on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibra::cli
