#include "tscl/teacher.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tscl/policies.hpp"

namespace tscl {

namespace {

bool uses_qtable(Algorithm a) {
    return a == Algorithm::Online || a == Algorithm::Naive || a == Algorithm::Window;
}

}  // namespace

Teacher::Teacher(int n_tasks, const TeacherConfig& cfg)
    : n_(n_tasks),
      cfg_(cfg),
      rng_(cfg.seed),
      // Sampling keeps no Q-table; give the unused member a valid alpha.
      q_(n_tasks, cfg.algorithm == Algorithm::Sampling ? 1.0 : cfg.alpha) {
    if (n_tasks < 1) {
        throw std::invalid_argument("Teacher: need at least one task");
    }
    if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0)) {
        throw std::invalid_argument("Teacher: epsilon must lie in [0, 1]");
    }
    if (uses_qtable(cfg.algorithm) && cfg.policy == PolicyKind::Boltzmann && !(cfg.tau > 0.0)) {
        throw std::invalid_argument("Teacher: tau must be > 0 for the Boltzmann policy");
    }
    if (cfg.algorithm != Algorithm::Online && cfg.window_k < 2) {
        throw std::invalid_argument("Teacher: window_k must be >= 2");
    }

    if (cfg.formulation == Formulation::Simple) {
        last_score_.assign(static_cast<size_t>(n_), 0.0);
    } else {
        prev_obs_.assign(static_cast<size_t>(n_), 0.0);
    }
    if (cfg.algorithm == Algorithm::Window) {
        windows_.reserve(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) windows_.emplace_back(cfg.window_k);
    }
    if (cfg.algorithm == Algorithm::Sampling) {
        buffers_.reserve(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) buffers_.emplace_back(cfg.window_k);
        sampled_rewards_.assign(static_cast<size_t>(n_), 0.0);
    }
    if (cfg.algorithm == Algorithm::Naive) {
        naive_obs_.resize(static_cast<size_t>(n_));
    }
}

TaskId Teacher::select_task(std::span<const double> pref) {
    if (cfg_.policy == PolicyKind::EpsGreedy) {
        return TaskId{eps_greedy_select(pref, cfg_.epsilon, rng_)};
    }
    return TaskId{sample_categorical(boltzmann_probs(pref, cfg_.tau), rng_)};
}

std::vector<double> Teacher::make_distribution(std::span<const double> pref) {
    if (cfg_.policy == PolicyKind::EpsGreedy) {
        return eps_greedy_distribution(pref, cfg_.epsilon, rng_);
    }
    return boltzmann_probs(pref, cfg_.tau);
}

std::vector<double> Teacher::sample_buffer_rewards() {
    std::vector<double> out(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        // Empty buffer counts as reward 1 so unseen tasks look promising.
        out[static_cast<size_t>(i)] = buffers_[static_cast<size_t>(i)].sample(rng_, 1.0);
    }
    return out;
}

TeacherAction Teacher::next() {
    if (committed_) {
        pending_ = committed_;
        return *committed_;
    }

    TeacherAction action = TeacherAction::single(TaskId{0});
    if (cfg_.formulation == Formulation::Simple) {
        switch (cfg_.algorithm) {
            case Algorithm::Online:
            case Algorithm::Window:
                action = TeacherAction::single(select_task(preference(q_.values(), cfg_.use_abs)));
                break;
            case Algorithm::Naive:
                action = TeacherAction::single(select_task(preference(q_.values(), cfg_.use_abs)));
                committed_ = action;
                break;
            case Algorithm::Sampling: {
                sampled_rewards_ = sample_buffer_rewards();
                const auto pref = preference(sampled_rewards_, cfg_.use_abs);
                action = TeacherAction::single(TaskId{argmax_random_tie(pref, rng_)});
                break;
            }
        }
    } else {
        switch (cfg_.algorithm) {
            case Algorithm::Online:
            case Algorithm::Window:
                action = TeacherAction::distribution(
                    make_distribution(preference(q_.values(), cfg_.use_abs)));
                break;
            case Algorithm::Naive:
                action = TeacherAction::distribution(
                    make_distribution(preference(q_.values(), cfg_.use_abs)));
                committed_ = action;
                break;
            case Algorithm::Sampling: {
                sampled_rewards_ = sample_buffer_rewards();
                const auto pref = preference(sampled_rewards_, cfg_.use_abs);
                const int best = argmax_random_tie(pref, rng_);
                // One-hot on the winner, then mix in the uniform distribution.
                std::vector<double> dist(static_cast<size_t>(n_), cfg_.epsilon / n_);
                dist[static_cast<size_t>(best)] += 1.0 - cfg_.epsilon;
                action = TeacherAction::distribution(std::move(dist));
                break;
            }
        }
    }
    pending_ = action;
    return action;
}

void Teacher::check_protocol(const TeacherAction& action, const TeacherObservation& obs,
                             int64_t t) const {
    if (!pending_) {
        throw std::logic_error("Teacher::observe: no pending action; call next() first");
    }
    if (!(action == *pending_)) {
        throw std::logic_error("Teacher::observe: action does not match the one issued by next()");
    }
    if (last_t_ && t <= *last_t_) {
        throw std::logic_error("Teacher::observe: t must be strictly increasing");
    }
    if (cfg_.formulation == Formulation::Simple) {
        if (!action.is_single() || !obs.is_single()) {
            throw std::logic_error("Teacher::observe: simple formulation expects a single score");
        }
        if (!(obs.task() == action.task())) {
            throw std::logic_error("Teacher::observe: observation is for a task never requested");
        }
        if (!std::isfinite(obs.score())) {
            throw std::domain_error("Teacher::observe: score must be finite");
        }
    } else {
        if (action.is_single() || obs.is_single()) {
            throw std::logic_error("Teacher::observe: batch formulation expects a score vector");
        }
        if (obs.scores().size() != static_cast<size_t>(n_)) {
            throw std::logic_error("Teacher::observe: score vector length mismatch");
        }
        for (double s : obs.scores()) {
            if (!std::isfinite(s)) {
                throw std::domain_error("Teacher::observe: scores must be finite");
            }
        }
    }
}

void Teacher::observe(const TeacherAction& action, const TeacherObservation& obs, int64_t t) {
    check_protocol(action, obs, t);
    if (cfg_.formulation == Formulation::Simple) {
        observe_simple(obs.task(), obs.score(), t);
    } else {
        observe_batch(obs.scores(), t);
    }
    last_t_ = t;
    pending_.reset();
}

void Teacher::observe_simple(TaskId task, double score, int64_t t) {
    const auto i = static_cast<size_t>(task.index);
    switch (cfg_.algorithm) {
        case Algorithm::Online: {
            const double r = score - last_score_[i];
            last_score_[i] = score;
            q_.update(task, r);
            break;
        }
        case Algorithm::Naive: {
            auto& burst = naive_obs_[i];
            burst.push_back(score);
            if (static_cast<int>(burst.size()) == cfg_.window_k) {
                std::vector<double> ks(burst.size());
                std::iota(ks.begin(), ks.end(), 1.0);
                q_.update(task, *ols_slope(ks, burst));
                burst.clear();
                committed_.reset();
            }
            break;
        }
        case Algorithm::Window: {
            auto& w = windows_[i];
            w.push(static_cast<double>(t), score);
            q_.update(task, w.slope().value_or(0.0));
            break;
        }
        case Algorithm::Sampling: {
            const double r = score - last_score_[i];
            last_score_[i] = score;
            buffers_[i].push(r);
            break;
        }
    }
}

void Teacher::observe_batch(const std::vector<double>& scores, int64_t t) {
    switch (cfg_.algorithm) {
        case Algorithm::Online: {
            std::vector<double> r(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) {
                const auto u = static_cast<size_t>(i);
                r[u] = scores[u] - prev_obs_[u];
            }
            prev_obs_ = scores;
            q_.update_all(r);
            break;
        }
        case Algorithm::Naive: {
            for (int i = 0; i < n_; ++i) {
                naive_obs_[static_cast<size_t>(i)].push_back(scores[static_cast<size_t>(i)]);
            }
            if (static_cast<int>(naive_obs_[0].size()) == cfg_.window_k) {
                std::vector<double> ks(naive_obs_[0].size());
                std::iota(ks.begin(), ks.end(), 1.0);
                std::vector<double> r(static_cast<size_t>(n_));
                for (int i = 0; i < n_; ++i) {
                    const auto u = static_cast<size_t>(i);
                    r[u] = *ols_slope(ks, naive_obs_[u]);
                    naive_obs_[u].clear();
                }
                q_.update_all(r);
                committed_.reset();
            }
            break;
        }
        case Algorithm::Window: {
            std::vector<double> r(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) {
                const auto u = static_cast<size_t>(i);
                auto& w = windows_[u];
                w.push(static_cast<double>(t), scores[u]);
                r[u] = w.slope().value_or(0.0);
            }
            q_.update_all(r);
            break;
        }
        case Algorithm::Sampling: {
            for (int i = 0; i < n_; ++i) {
                const auto u = static_cast<size_t>(i);
                buffers_[u].push(scores[u] - prev_obs_[u]);
            }
            prev_obs_ = scores;
            break;
        }
    }
}

std::vector<double> Teacher::q_snapshot() const {
    if (cfg_.algorithm == Algorithm::Sampling) {
        return sampled_rewards_;
    }
    return {q_.values().begin(), q_.values().end()};
}

}  // namespace tscl
