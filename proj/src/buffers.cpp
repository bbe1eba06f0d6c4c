#include "tscl/buffers.hpp"

#include <stdexcept>

#include "tscl/policies.hpp"

namespace tscl {

ScoreWindow::ScoreWindow(int capacity) : capacity_(capacity) {
    if (capacity < 1) {
        throw std::invalid_argument("ScoreWindow: capacity must be >= 1");
    }
    t_.reserve(static_cast<size_t>(capacity));
    score_.reserve(static_cast<size_t>(capacity));
}

void ScoreWindow::push(double t, double score) {
    if (!t_.empty() && t <= t_.back()) {
        throw std::invalid_argument("ScoreWindow::push: timesteps must be strictly increasing");
    }
    if (size() == capacity_) {
        t_.erase(t_.begin());
        score_.erase(score_.begin());
    }
    t_.push_back(t);
    score_.push_back(score);
}

std::optional<double> ScoreWindow::slope() const {
    return ols_slope(t_, score_);
}

RewardBuffer::RewardBuffer(int capacity) : capacity_(capacity) {
    if (capacity < 1) {
        throw std::invalid_argument("RewardBuffer: capacity must be >= 1");
    }
    r_.reserve(static_cast<size_t>(capacity));
}

void RewardBuffer::push(double reward) {
    if (size() == capacity_) {
        r_.erase(r_.begin());
    }
    r_.push_back(reward);
}

double RewardBuffer::sample(Rng& rng, double empty_value) const {
    if (r_.empty()) {
        return empty_value;
    }
    return r_[static_cast<size_t>(rng.uniform_int(size()))];
}

}  // namespace tscl
