#pragma once

#include <string>
#include <vector>

#include "elastica/optimizer.hpp"

namespace elastica::cli {

enum class Command { solve, seed, reference, compare, validate };

struct RunConfig {
    Command command = Command::solve;
    std::string input_path;
    int n = 40;
    std::vector<int> n_schedule;       // empty -> direct solve
    int baseline_n = 100;              // `compare` only
    std::string output_dir = ".";
    bool csv = true;
    bool svg = true;
    bool json = true;
    bool seed_only = false;            // `solve --seed-only` stops after Step 1
    bool quiet = false;
    OptimizerSettings optimizer;
};

// Executes one command. Returns the process exit status:
//   0  success
//   1  solver failure (diagnostics written to the output directory)
//   2  input error
// All file output is deterministic for fixed inputs.
int run(const RunConfig& config);

} // namespace elastica::cli
