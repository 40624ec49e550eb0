#pragma once

#include "klr/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klr::cli {

// One parsed command-line request.  k is already reduced to the node set;
// beta, when present, must have length ell + 1 with nonnegative entries.
struct Query {
    int ell = 2;
    int k = 0;
    std::vector<long long> beta;
    std::optional<std::vector<int>> nu;
    std::optional<std::vector<int>> nu2;
    int n_max = 6;
    std::string format;  // empty = the command's default
    int jobs = 1;
};

// Exit codes: 0 success, 1 mismatch or empty block, 2 usage error.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

CommandResult run_classify(const Query& q);
CommandResult run_dims(const Query& q);
CommandResult run_crystal(const Query& q);
CommandResult run_tables(const std::string& selector, int jobs);

}  // namespace klr::cli
