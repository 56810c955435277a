#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperres::cli {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitInvalidInput = 4;

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hyperres::cli
