#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqroot::cli {

// Exit codes shared by every subcommand.
inline constexpr int kYes = 0;             // root found / check holds
inline constexpr int kNo = 1;              // no root / check fails
inline constexpr int kUsageError = 2;      // bad arguments, unreadable or malformed input
inline constexpr int kBudgetExceeded = 3;  // oracle gave up

// `args` excludes the program name. Input path "-" (the default) reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sqroot::cli
