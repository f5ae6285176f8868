#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ulink {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

struct RunConfig {
    std::string command;
    std::string invariant = "b1";
    std::string code;
    std::string file;
    std::string census;
    std::string spec;
    std::string format = "text";
    std::uint64_t seed = 1;
    int trials = 20;
    int max_crossings = 0;  // 0: per-command default
    int n_max = 10;
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulink
