#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tscl/config.hpp"
#include "tscl/experiment.hpp"

namespace tscl {

struct SweepResult {
    std::vector<AggregateStats> rows;                // one per teacher, config order
    std::vector<std::vector<RunTrace>> traces;       // [teacher][seed], seed order
};

/// Runs every (teacher, seed) pair. Parallel over runs when jobs > 1; the
/// output is ordered by (teacher, seed) and identical to a serial sweep
/// because each run's randomness derives only from its own seed.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 0);

struct CompareRow {
    std::string name;
    double median_steps_a = 0.0;
    double median_steps_b = 0.0;
    double steps_change = 0.0;  // (b - a) / a, negative means b is faster
    double final_min_a = 0.0;
    double final_min_b = 0.0;
    double final_min_change = 0.0;
};

/// Per-teacher relative improvement between two aggregate summaries
/// (rows matched by teacher name; summaries from `run` wrap into one row).
std::vector<CompareRow> compare_summaries(const nlohmann::json& a, const nlohmann::json& b);

std::string compare_table(const std::vector<CompareRow>& rows);
std::string compare_csv(const std::vector<CompareRow>& rows);

}  // namespace tscl
