#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tscl/experiment.hpp"

namespace tscl {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Several labelled teacher variants sharing one student and run block,
/// evaluated over a common seed list.
struct SweepSpec {
    ExperimentConfig base;  // base.teacher holds the first variant
    std::vector<TeacherSpec> teachers;
};

/// Flat key=value configuration, one pair per line, '#' comments.
///
/// Keys:
///   student.kind = chain | grid2d | chain_mdp
///   student.*                 (per-kind fields, see README)
///   teacher.kind = tscl | uniform | manual | final_task_only
///   teacher.algorithm = online | naive | window | sampling
///   teacher.formulation = simple | batch
///   teacher.policy = epsgreedy | boltzmann
///   teacher.alpha / epsilon / tau / window_k / use_abs
///   teacher.schedule = task:steps,task:steps,...   (manual)
///   run.max_steps, run.mastery_threshold, run.seeds = A..B or a,b,c
///
/// Sweeps list their variants once and prefix per-variant teacher keys with
/// the variant name:
///   sweep.teachers = uniform,window
///   teacher.uniform.kind = uniform
///   teacher.window.kind = tscl
///   teacher.window.algorithm = window
ExperimentConfig parse_experiment_config(const std::string& text);
SweepSpec parse_sweep_config(const std::string& text);

ExperimentConfig load_experiment_config(const std::string& path);
SweepSpec load_sweep_config(const std::string& path);

/// "A..B" (inclusive) or comma-separated list.
std::vector<uint64_t> parse_seed_list(const std::string& text);

}  // namespace tscl
