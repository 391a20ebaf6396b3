#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eog/pathfinder.hpp"

namespace eog {

struct RunConfig {
    std::vector<int> ns = {8, 12, 16, 24};
    int seeds = 50;
    std::vector<std::string> strategies = {"greedy", "find", "lower-bound"};
    bool oracle = false;
    std::string out_dir;   // empty: $EOG_OUT_DIR, then "./out"
    std::string input_file; // when set, overrides the generated matrix
    double c_constant = 70.0;
    SearchMode mode = SearchMode::kBestEffort;
    double epsilon = 0.25; // greedy sparsity parameter
    int altitude_guard = 8;

    std::string resolved_out_dir() const;
};

// each returns a process exit code and logs human-readable progress
int run_verify(const RunConfig& cfg, std::ostream& log);
int run_paths(const RunConfig& cfg, std::ostream& log);
int run_altitude(const RunConfig& cfg, std::ostream& log);
int run_gen(const RunConfig& cfg, std::ostream& log);
int run_table(const RunConfig& cfg, std::ostream& log);

} // namespace eog
