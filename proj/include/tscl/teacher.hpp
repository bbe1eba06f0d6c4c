#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "tscl/buffers.hpp"
#include "tscl/qtable.hpp"
#include "tscl/rng.hpp"
#include "tscl/task_space.hpp"

namespace tscl {

enum class Algorithm { Online, Naive, Window, Sampling };
enum class Formulation { Simple, Batch };
enum class PolicyKind { EpsGreedy, Boltzmann };

struct TeacherConfig {
    Algorithm algorithm = Algorithm::Online;
    Formulation formulation = Formulation::Simple;
    PolicyKind policy = PolicyKind::EpsGreedy;
    double alpha = 0.1;    // Q-table learning rate
    double epsilon = 0.1;  // exploration coefficient
    double tau = 0.0004;   // Boltzmann temperature
    int window_k = 10;     // FIFO capacity (Window/Sampling), repeat count (Naive)
    bool use_abs = true;   // select by |Q| rather than Q
    uint64_t seed = 0;
};

/// Either one task to train on (simple formulation) or a probability
/// distribution over all tasks (batch formulation).
struct TeacherAction {
    std::variant<TaskId, std::vector<double>> value;

    static TeacherAction single(TaskId task) { return {task}; }
    static TeacherAction distribution(std::vector<double> probs) { return {std::move(probs)}; }

    bool is_single() const { return std::holds_alternative<TaskId>(value); }
    TaskId task() const { return std::get<TaskId>(value); }
    const std::vector<double>& probs() const { return std::get<std::vector<double>>(value); }

    friend bool operator==(const TeacherAction&, const TeacherAction&) = default;
};

/// Either the trained task's score (simple) or all task scores (batch).
struct TeacherObservation {
    struct SingleScore {
        TaskId task;
        double score = 0.0;
        friend bool operator==(const SingleScore&, const SingleScore&) = default;
    };

    std::variant<SingleScore, std::vector<double>> value;

    static TeacherObservation single(TaskId task, double score) {
        return {SingleScore{task, score}};
    }
    static TeacherObservation vector(std::vector<double> scores) { return {std::move(scores)}; }

    bool is_single() const { return std::holds_alternative<SingleScore>(value); }
    TaskId task() const { return std::get<SingleScore>(value).task; }
    double score() const { return std::get<SingleScore>(value).score; }
    const std::vector<double>& scores() const { return std::get<std::vector<double>>(value); }

    friend bool operator==(const TeacherObservation&, const TeacherObservation&) = default;
};

/// One of the eight curriculum schedulers: {Online, Naive, Window, Sampling}
/// x {Simple, Batch}.
///
/// The teacher is a single-owner state machine driven by alternating calls:
/// next() proposes an action, observe() feeds back the resulting score(s).
/// Rewards are score changes (Online, Sampling) or learning-curve slopes
/// (Naive, Window); selection acts on |Q| by default so that tasks being
/// forgotten attract training again.
class Teacher {
public:
    Teacher(int n_tasks, const TeacherConfig& cfg);

    int num_tasks() const { return n_; }
    const TeacherConfig& config() const { return cfg_; }

    TeacherAction next();

    /// Feed back the observation for the last action issued by next().
    /// t must be strictly greater than on the previous call.
    void observe(const TeacherAction& action, const TeacherObservation& obs, int64_t t);

    /// Q values for the Q-based algorithms; for Sampling, the rewards drawn
    /// at the most recent next() (zeros before the first call).
    std::vector<double> q_snapshot() const;

private:
    TaskId select_task(std::span<const double> pref);
    std::vector<double> make_distribution(std::span<const double> pref);
    std::vector<double> sample_buffer_rewards();
    void check_protocol(const TeacherAction& action, const TeacherObservation& obs,
                        int64_t t) const;

    void observe_simple(TaskId task, double score, int64_t t);
    void observe_batch(const std::vector<double>& scores, int64_t t);

    int n_;
    TeacherConfig cfg_;
    Rng rng_;
    QTable q_;

    std::vector<double> last_score_;              // simple: previous score per task (0 before first)
    std::vector<double> prev_obs_;                // batch: previous score vector (0 at start)
    std::vector<ScoreWindow> windows_;            // Window
    std::vector<RewardBuffer> buffers_;           // Sampling
    std::vector<std::vector<double>> naive_obs_;  // Naive: scores collected in current burst
    std::optional<TeacherAction> committed_;      // Naive: action held for K calls
    std::vector<double> sampled_rewards_;         // Sampling: last draws, for q_snapshot()

    std::optional<TeacherAction> pending_;
    std::optional<int64_t> last_t_;
};

}  // namespace tscl
