#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tscl/rng.hpp"

namespace tscl {

/// FIFO of (timestep, score) pairs with fixed capacity, newest last.
/// Backs the Window algorithm's per-task learning-curve regression.
class ScoreWindow {
public:
    explicit ScoreWindow(int capacity);

    /// Append one observation. t must strictly exceed the stored tail.
    void push(double t, double score);

    int size() const { return static_cast<int>(t_.size()); }
    int capacity() const { return capacity_; }
    bool empty() const { return t_.empty(); }

    std::span<const double> times() const { return t_; }
    std::span<const double> scores() const { return score_; }

    /// OLS slope of the stored scores against their timesteps.
    std::optional<double> slope() const;

private:
    std::vector<double> t_;
    std::vector<double> score_;
    int capacity_;
};

/// FIFO of rewards with fixed capacity, newest last. Backs the Sampling
/// algorithm's per-task recent-reward draws.
class RewardBuffer {
public:
    explicit RewardBuffer(int capacity);

    void push(double reward);

    int size() const { return static_cast<int>(r_.size()); }
    int capacity() const { return capacity_; }
    bool empty() const { return r_.empty(); }

    std::span<const double> rewards() const { return r_; }

    /// Uniform draw over the stored rewards; empty_value when empty.
    double sample(Rng& rng, double empty_value) const;

private:
    std::vector<double> r_;
    int capacity_;
};

}  // namespace tscl
