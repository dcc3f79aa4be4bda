#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace texguard::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitError = 2;

// Entry point of the texguard binary. `-` paths read `in` or write `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace texguard::cli
