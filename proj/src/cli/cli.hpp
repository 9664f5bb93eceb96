#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sumsetlab::cli {

inline constexpr const char * version = "0.1.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 2,
    exit_budget = 3,
    exit_mismatch = 4,
};

struct Environment {
    std::optional<std::string> budget_bits; // SUMSETLAB_BUDGET_BITS

    static auto from_process() -> Environment;
};

/// Runs one command; args exclude the program name.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err, const Environment & env = {})
    -> int;

}
