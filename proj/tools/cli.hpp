#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpbvd::cli {

constexpr int kExitRan = 0;
constexpr int kExitYes = 10;
constexpr int kExitNo = 20;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr int kFormatVersion = 1;

/// Runs one command line (without the program name). `in` backs an input path of "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bpbvd::cli
