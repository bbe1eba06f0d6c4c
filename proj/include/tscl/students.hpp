#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tscl/rng.hpp"
#include "tscl/task_space.hpp"

namespace tscl {

/// Student side of the loop: trains on chosen tasks, reports per-task scores
/// in [0, 1]. eval_all() is a pure observation with no training side effects.
class Student {
public:
    virtual ~Student() = default;

    virtual int num_tasks() const = 0;

    /// One training step on a single task; returns that task's observed score.
    virtual double train_simple(TaskId task, Rng& rng) = 0;

    /// One training step over a task distribution; returns observed scores
    /// for all tasks (the validation pass).
    virtual std::vector<double> train_batch(std::span<const double> dist, Rng& rng) = 0;

    /// Noise-free evaluation of every task.
    virtual std::vector<double> eval_all() const = 0;
};

struct ChainStudentConfig {
    int n_tasks = 5;
    double learn_rate = 0.08;     // skill gained per step, scaled by gate and headroom
    double gate_threshold = 0.7;  // prerequisite level below which learning is blocked
    double forget_rate = 1e-4;    // per-step decay of untrained skills
    double noise_sigma = 0.01;    // Gaussian noise on observed scores only
};

/// Synthetic learner where task i only improves once task i-1 clears the
/// gate threshold: skills climb one after another and decay when starved of
/// training, which is exactly what slope-following teachers must exploit.
class ChainStudent : public Student {
public:
    explicit ChainStudent(const ChainStudentConfig& cfg);

    int num_tasks() const override { return static_cast<int>(skill_.size()); }
    double train_simple(TaskId task, Rng& rng) override;
    std::vector<double> train_batch(std::span<const double> dist, Rng& rng) override;
    std::vector<double> eval_all() const override;

    std::span<const double> skills() const { return skill_; }

private:
    double gate(std::span<const double> s, int task) const;
    double observed(double skill, Rng& rng) const;

    ChainStudentConfig cfg_;
    std::vector<double> skill_;
};

struct Grid2DStudentConfig {
    int side = 4;  // side x side tasks, flattened row-major
    double learn_rate = 0.08;
    double gate_threshold = 0.7;
    double forget_rate = 2e-5;
    double noise_sigma = 0.01;
};

/// 2-D variant: cell (i, j) is gated by both its up-neighbor (i-1, j) and
/// left-neighbor (i, j-1); missing neighbors gate as fully open.
class Grid2DStudent : public Student {
public:
    explicit Grid2DStudent(const Grid2DStudentConfig& cfg);

    int num_tasks() const override { return space_.size(); }
    double train_simple(TaskId task, Rng& rng) override;
    std::vector<double> train_batch(std::span<const double> dist, Rng& rng) override;
    std::vector<double> eval_all() const override;

    const TaskSpace& space() const { return space_; }
    std::span<const double> skills() const { return skill_; }

private:
    double gate(std::span<const double> s, int task) const;
    double observed(double skill, Rng& rng) const;

    Grid2DStudentConfig cfg_;
    TaskSpace space_;
    std::vector<double> skill_;
};

struct ChainMdpConfig {
    std::vector<int> chain_lengths = {2, 4, 7, 11, 16};  // strictly increasing
    int episode_cap = 32;
    double q_learn_rate = 0.5;
    double explore_eps = 0.15;
    double step_penalty = -0.1;
    double goal_reward = 10.0;
    int eval_episodes = 1;
};

/// Tabular Q-learner on combination-lock chains: action 1 advances one state,
/// action 0 (or any wrong move) resets to the start. All tasks share one
/// Q-table over states 0..max_length, so skills transfer along the curriculum
/// while undirected exploration on the longest chain stays exponentially
/// unlikely to reach the goal.
class ChainMdpStudent : public Student {
public:
    explicit ChainMdpStudent(const ChainMdpConfig& cfg);

    int num_tasks() const override { return static_cast<int>(cfg_.chain_lengths.size()); }
    double train_simple(TaskId task, Rng& rng) override;
    std::vector<double> train_batch(std::span<const double> dist, Rng& rng) override;
    std::vector<double> eval_all() const override;

    const ChainMdpConfig& config() const { return cfg_; }

    /// Goals reached during training episodes, for diagnostics.
    int64_t training_goals() const { return training_goals_; }
    int64_t training_episodes() const { return training_episodes_; }

private:
    void run_training_episode(int length, Rng& rng);
    bool run_greedy_episode(int length) const;
    double eval_task(int task) const;

    ChainMdpConfig cfg_;
    std::vector<std::array<double, 2>> q_;  // [state][action]; 0 = back, 1 = advance
    int64_t training_goals_ = 0;
    int64_t training_episodes_ = 0;
};

}  // namespace tscl
