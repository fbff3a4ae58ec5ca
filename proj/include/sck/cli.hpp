#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitObligations = 1;  // warnings under --strict-obligations
inline constexpr int kExitInput = 2;        // parse, sort or resource errors
inline constexpr int kExitUsage = 3;        // bad flags, patterns or targets

/// Runs one `sck` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sck::cli
