#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mindist {

inline constexpr const char* kToolName = "mindist";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 exact answer, 1 parse/configuration error, 2 truncated or
// bound-only result, 3 infeasible brute force.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mindist
