#include "tscl/students.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tscl/policies.hpp"

namespace tscl {

namespace {

double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

void check_task_range(int index, int n) {
    if (index < 0 || index >= n) {
        throw std::out_of_range("Student: task index out of range");
    }
}

void check_distribution(std::span<const double> dist, int n) {
    if (static_cast<int>(dist.size()) != n) {
        throw std::invalid_argument("Student: distribution length mismatch");
    }
    double sum = 0.0;
    for (double p : dist) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("Student: distribution entries must be nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        throw std::invalid_argument("Student: distribution must sum to 1");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ChainStudent

ChainStudent::ChainStudent(const ChainStudentConfig& cfg)
    : cfg_(cfg), skill_(static_cast<size_t>(cfg.n_tasks), 0.0) {
    if (cfg.n_tasks < 2) {
        throw std::invalid_argument("ChainStudent: need at least two tasks");
    }
    if (!(cfg.gate_threshold >= 0.0 && cfg.gate_threshold < 1.0)) {
        throw std::invalid_argument("ChainStudent: gate_threshold must lie in [0, 1)");
    }
    if (!(cfg.forget_rate >= 0.0 && cfg.forget_rate < 1.0)) {
        throw std::invalid_argument("ChainStudent: forget_rate must lie in [0, 1)");
    }
    if (!(cfg.noise_sigma >= 0.0)) {
        throw std::invalid_argument("ChainStudent: noise_sigma must be >= 0");
    }
}

double ChainStudent::gate(std::span<const double> s, int task) const {
    if (task == 0) return 1.0;
    return std::max(0.0, (s[static_cast<size_t>(task - 1)] - cfg_.gate_threshold) /
                             (1.0 - cfg_.gate_threshold));
}

double ChainStudent::observed(double skill, Rng& rng) const {
    if (cfg_.noise_sigma > 0.0) {
        skill += rng.gaussian(0.0, cfg_.noise_sigma);
    }
    return clamp01(skill);
}

double ChainStudent::train_simple(TaskId task, Rng& rng) {
    check_task_range(task.index, num_tasks());
    const auto i = static_cast<size_t>(task.index);
    const double g = gate(skill_, task.index);
    skill_[i] = skill_[i] + cfg_.learn_rate * g * (1.0 - skill_[i]);
    for (size_t j = 0; j < skill_.size(); ++j) {
        if (j != i) skill_[j] *= 1.0 - cfg_.forget_rate;
    }
    return observed(skill_[i], rng);
}

std::vector<double> ChainStudent::train_batch(std::span<const double> dist, Rng& rng) {
    check_distribution(dist, num_tasks());
    // Gates come from the pre-step snapshot so task order cannot matter.
    const std::vector<double> old = skill_;
    for (size_t i = 0; i < skill_.size(); ++i) {
        const double g = gate(old, static_cast<int>(i));
        const double trained = old[i] + cfg_.learn_rate * dist[i] * g * (1.0 - old[i]);
        skill_[i] = trained * (1.0 - cfg_.forget_rate * (1.0 - dist[i]));
    }
    std::vector<double> scores(skill_.size());
    for (size_t i = 0; i < skill_.size(); ++i) {
        scores[i] = observed(skill_[i], rng);
    }
    return scores;
}

std::vector<double> ChainStudent::eval_all() const {
    std::vector<double> out(skill_.size());
    for (size_t i = 0; i < skill_.size(); ++i) {
        out[i] = clamp01(skill_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grid2DStudent

Grid2DStudent::Grid2DStudent(const Grid2DStudentConfig& cfg)
    : cfg_(cfg),
      space_(TaskSpace::grid(cfg.side, cfg.side)),
      skill_(static_cast<size_t>(cfg.side) * static_cast<size_t>(cfg.side), 0.0) {
    if (cfg.side < 2) {
        throw std::invalid_argument("Grid2DStudent: side must be >= 2");
    }
    if (!(cfg.gate_threshold >= 0.0 && cfg.gate_threshold < 1.0)) {
        throw std::invalid_argument("Grid2DStudent: gate_threshold must lie in [0, 1)");
    }
    if (!(cfg.forget_rate >= 0.0 && cfg.forget_rate < 1.0)) {
        throw std::invalid_argument("Grid2DStudent: forget_rate must lie in [0, 1)");
    }
    if (!(cfg.noise_sigma >= 0.0)) {
        throw std::invalid_argument("Grid2DStudent: noise_sigma must be >= 0");
    }
}

double Grid2DStudent::gate(std::span<const double> s, int task) const {
    const auto [row, col] = space_.coords(TaskId{task});
    const double denom = 1.0 - cfg_.gate_threshold;
    double g = 1.0;
    if (row > 0) {
        const double up = s[static_cast<size_t>(space_.at(row - 1, col).index)];
        g *= std::max(0.0, (up - cfg_.gate_threshold) / denom);
    }
    if (col > 0) {
        const double left = s[static_cast<size_t>(space_.at(row, col - 1).index)];
        g *= std::max(0.0, (left - cfg_.gate_threshold) / denom);
    }
    return g;
}

double Grid2DStudent::observed(double skill, Rng& rng) const {
    if (cfg_.noise_sigma > 0.0) {
        skill += rng.gaussian(0.0, cfg_.noise_sigma);
    }
    return clamp01(skill);
}

double Grid2DStudent::train_simple(TaskId task, Rng& rng) {
    check_task_range(task.index, num_tasks());
    const auto i = static_cast<size_t>(task.index);
    const double g = gate(skill_, task.index);
    skill_[i] = skill_[i] + cfg_.learn_rate * g * (1.0 - skill_[i]);
    for (size_t j = 0; j < skill_.size(); ++j) {
        if (j != i) skill_[j] *= 1.0 - cfg_.forget_rate;
    }
    return observed(skill_[i], rng);
}

std::vector<double> Grid2DStudent::train_batch(std::span<const double> dist, Rng& rng) {
    check_distribution(dist, num_tasks());
    const std::vector<double> old = skill_;
    for (size_t i = 0; i < skill_.size(); ++i) {
        const double g = gate(old, static_cast<int>(i));
        const double trained = old[i] + cfg_.learn_rate * dist[i] * g * (1.0 - old[i]);
        skill_[i] = trained * (1.0 - cfg_.forget_rate * (1.0 - dist[i]));
    }
    std::vector<double> scores(skill_.size());
    for (size_t i = 0; i < skill_.size(); ++i) {
        scores[i] = observed(skill_[i], rng);
    }
    return scores;
}

std::vector<double> Grid2DStudent::eval_all() const {
    std::vector<double> out(skill_.size());
    for (size_t i = 0; i < skill_.size(); ++i) {
        out[i] = clamp01(skill_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// ChainMdpStudent

ChainMdpStudent::ChainMdpStudent(const ChainMdpConfig& cfg) : cfg_(cfg) {
    if (cfg.chain_lengths.empty()) {
        throw std::invalid_argument("ChainMdpStudent: need at least one chain");
    }
    int prev = 0;
    for (int len : cfg.chain_lengths) {
        if (len <= prev) {
            throw std::invalid_argument("ChainMdpStudent: chain_lengths must be strictly increasing");
        }
        prev = len;
    }
    if (cfg.episode_cap < 1) {
        throw std::invalid_argument("ChainMdpStudent: episode_cap must be >= 1");
    }
    if (!(cfg.q_learn_rate >= 0.0 && cfg.q_learn_rate <= 1.0)) {
        throw std::invalid_argument("ChainMdpStudent: q_learn_rate must lie in [0, 1]");
    }
    if (!(cfg.explore_eps >= 0.0 && cfg.explore_eps <= 1.0)) {
        throw std::invalid_argument("ChainMdpStudent: explore_eps must lie in [0, 1]");
    }
    if (cfg.eval_episodes < 1) {
        throw std::invalid_argument("ChainMdpStudent: eval_episodes must be >= 1");
    }
    // Shared state space: 0 .. max chain length.
    q_.assign(static_cast<size_t>(cfg.chain_lengths.back()) + 1, {0.0, 0.0});
}

void ChainMdpStudent::run_training_episode(int length, Rng& rng) {
    ++training_episodes_;
    int state = 0;
    for (int step = 0; step < cfg_.episode_cap; ++step) {
        int action;
        if (rng.bernoulli(cfg_.explore_eps)) {
            action = rng.uniform_int(2);
        } else {
            const auto& qs = q_[static_cast<size_t>(state)];
            if (qs[0] == qs[1]) {
                action = rng.uniform_int(2);
            } else {
                action = qs[1] > qs[0] ? 1 : 0;
            }
        }

        int next_state;
        double reward = cfg_.step_penalty;
        bool done = false;
        if (action == 1) {
            next_state = state + 1;
            if (next_state == length) {
                reward += cfg_.goal_reward;
                done = true;
                ++training_goals_;
            }
        } else {
            next_state = 0;
        }

        double& q = q_[static_cast<size_t>(state)][static_cast<size_t>(action)];
        const double bootstrap =
            done ? 0.0
                 : std::max(q_[static_cast<size_t>(next_state)][0], q_[static_cast<size_t>(next_state)][1]);
        q += cfg_.q_learn_rate * (reward + bootstrap - q);

        if (done) return;
        state = next_state;
    }
}

bool ChainMdpStudent::run_greedy_episode(int length) const {
    int state = 0;
    for (int step = 0; step < cfg_.episode_cap; ++step) {
        // Deterministic evaluation: ties resolve to the lowest action index.
        const auto& qs = q_[static_cast<size_t>(state)];
        const int action = qs[1] > qs[0] ? 1 : 0;
        if (action == 1) {
            ++state;
            if (state == length) return true;
        } else {
            state = 0;
        }
    }
    return false;
}

double ChainMdpStudent::eval_task(int task) const {
    int successes = 0;
    for (int e = 0; e < cfg_.eval_episodes; ++e) {
        if (run_greedy_episode(cfg_.chain_lengths[static_cast<size_t>(task)])) {
            ++successes;
        }
    }
    return static_cast<double>(successes) / cfg_.eval_episodes;
}

double ChainMdpStudent::train_simple(TaskId task, Rng& rng) {
    check_task_range(task.index, num_tasks());
    run_training_episode(cfg_.chain_lengths[static_cast<size_t>(task.index)], rng);
    return eval_task(task.index);
}

std::vector<double> ChainMdpStudent::train_batch(std::span<const double> dist, Rng& rng) {
    check_distribution(dist, num_tasks());
    const int task = sample_categorical(dist, rng);
    run_training_episode(cfg_.chain_lengths[static_cast<size_t>(task)], rng);
    return eval_all();
}

std::vector<double> ChainMdpStudent::eval_all() const {
    std::vector<double> out(static_cast<size_t>(num_tasks()));
    for (int i = 0; i < num_tasks(); ++i) {
        out[static_cast<size_t>(i)] = eval_task(i);
    }
    return out;
}

}  // namespace tscl
