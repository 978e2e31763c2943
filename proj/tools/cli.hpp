// Command-line surface. The runner is a plain function over argv-style
// arguments so the test suite can invoke it in process and capture output.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 budget
// exceeded, 4 invalid point, 5 illegal degree.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace legcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInvalidPoint = 4;
inline constexpr int kExitIllegalDegree = 5;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legcat::cli
