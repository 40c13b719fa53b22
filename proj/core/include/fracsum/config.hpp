#pragma once

#include <string>

#include "fracsum/asympt.hpp"
#include "fracsum/summatory.hpp"

namespace fracsum {

// Run-wide configuration. File format: flat key = value lines grouped under
// [section] headers, '#' comments; unknown keys are rejected. Command-line
// flags overlay the file (flags win).
struct RunConfig {
    u64 sieve_limit = 2'000'000;
    GridSpec grid;                      // [grid] min_x / max_x / ratio
    double epsilon_slack = 0.15;        // operationalized epsilon on exponents
    Real precision_target = Real("1e-10");
    std::string output_dir = "out";
    Budgets budgets;

    void validate() const;
};

RunConfig load_config(const std::string& path);
RunConfig config_from_env_or_default();   // honors FRACSUM_CONFIG

} // namespace fracsum
