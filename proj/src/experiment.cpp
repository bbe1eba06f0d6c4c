#include "tscl/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tscl {

std::unique_ptr<Student> make_student(const StudentSpec& spec) {
    switch (spec.kind) {
        case StudentKind::Chain:
            return std::make_unique<ChainStudent>(spec.chain);
        case StudentKind::Grid2D:
            return std::make_unique<Grid2DStudent>(spec.grid);
        case StudentKind::ChainMdp:
            return std::make_unique<ChainMdpStudent>(spec.mdp);
    }
    throw std::logic_error("make_student: unknown student kind");
}

std::unique_ptr<TaskScheduler> make_scheduler(const TeacherSpec& spec, int n_tasks,
                                              uint64_t seed) {
    switch (spec.kind) {
        case TeacherKind::Tscl: {
            TeacherConfig cfg = spec.config;
            cfg.seed = seed;
            return std::make_unique<TeacherScheduler>(n_tasks, cfg);
        }
        case TeacherKind::Uniform:
            return std::make_unique<UniformScheduler>(n_tasks, spec.formulation, seed);
        case TeacherKind::Manual:
            if (spec.formulation != Formulation::Simple) {
                throw std::invalid_argument("make_scheduler: manual curriculum is simple-only");
            }
            return std::make_unique<ManualScheduler>(n_tasks, spec.schedule);
        case TeacherKind::FinalTaskOnly:
            if (spec.formulation != Formulation::Simple) {
                throw std::invalid_argument("make_scheduler: final-task-only is simple-only");
            }
            return std::make_unique<FinalTaskScheduler>(n_tasks);
    }
    throw std::logic_error("make_scheduler: unknown teacher kind");
}

RunTrace run_session(const ExperimentConfig& cfg, uint64_t seed) {
    if (cfg.max_steps < 0) {
        throw std::invalid_argument("run_session: max_steps must be >= 0");
    }
    if (!(cfg.mastery_threshold > 0.0 && cfg.mastery_threshold <= 1.0)) {
        throw std::invalid_argument("run_session: mastery_threshold must lie in (0, 1]");
    }

    auto student = make_student(cfg.student);
    const int n = student->num_tasks();

    const Rng root(seed);
    auto scheduler =
        make_scheduler(cfg.teacher, n, Rng::derive_seed(seed, rng_streams::kTeacher));
    Rng student_rng = root.stream(rng_streams::kStudent);

    if (cfg.teacher.kind == TeacherKind::Manual) {
        const auto* manual = static_cast<const ManualScheduler*>(scheduler.get());
        if (manual->total_steps() > cfg.max_steps) {
            throw std::invalid_argument("run_session: manual schedule exceeds max_steps");
        }
    }

    RunTrace trace;
    trace.seed = seed;
    trace.max_steps = cfg.max_steps;

    std::vector<double> prev_scores(static_cast<size_t>(n), 0.0);
    const bool simple = scheduler->formulation() == Formulation::Simple;

    for (int64_t t = 1; t <= cfg.max_steps; ++t) {
        StepRecord step;
        step.t = t;
        step.action = scheduler->next();

        if (simple) {
            const TaskId task = step.action.task();
            const double score = student->train_simple(task, student_rng);
            step.obs = TeacherObservation::single(task, score);
            const auto i = static_cast<size_t>(task.index);
            step.reward = score - prev_scores[i];
            prev_scores[i] = score;
        } else {
            const auto scores = student->train_batch(step.action.probs(), student_rng);
            step.obs = TeacherObservation::vector(scores);
            double r = 0.0;
            for (size_t i = 0; i < scores.size(); ++i) {
                r += scores[i] - prev_scores[i];
            }
            prev_scores = scores;
            step.reward = r;
        }

        scheduler->observe(step.action, step.obs, t);

        step.eval_scores = student->eval_all();
        step.q = scheduler->q_snapshot();
        trace.teacher_return += step.reward;

        const bool mastered =
            std::all_of(step.eval_scores.begin(), step.eval_scores.end(),
                        [&](double s) { return s >= cfg.mastery_threshold; });
        trace.steps.push_back(std::move(step));
        if (mastered) {
            trace.steps_to_mastery = t;
            break;
        }
    }

    trace.final_scores = student->eval_all();
    return trace;
}

bool telescoping_check(const RunTrace& trace, double tol) {
    double reward_sum = 0.0;
    std::vector<std::optional<double>> last_score;
    for (const auto& step : trace.steps) {
        if (!step.obs.is_single()) {
            throw std::logic_error("telescoping_check: requires a simple-formulation trace");
        }
        const auto i = static_cast<size_t>(step.obs.task().index);
        if (i >= last_score.size()) {
            last_score.resize(i + 1);
        }
        last_score[i] = step.obs.score();
        reward_sum += step.reward;
    }
    double final_sum = 0.0;
    for (const auto& s : last_score) {
        if (s) final_sum += *s;
    }
    return std::abs(reward_sum - final_sum) <= tol;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median: empty input");
    }
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

AggregateStats aggregate(const std::string& name, const std::vector<RunTrace>& traces) {
    if (traces.empty()) {
        throw std::invalid_argument("aggregate: need at least one trace");
    }
    AggregateStats stats;
    stats.name = name;
    stats.n_runs = static_cast<int>(traces.size());

    std::vector<double> steps;
    steps.reserve(traces.size());
    double final_min_sum = 0.0;
    const size_t n_tasks = traces.front().final_scores.size();
    stats.mean_final_scores.assign(n_tasks, 0.0);

    for (const auto& trace : traces) {
        if (trace.steps_to_mastery) {
            ++stats.n_mastered;
            steps.push_back(static_cast<double>(*trace.steps_to_mastery));
        } else {
            steps.push_back(static_cast<double>(trace.max_steps));
        }
        if (trace.final_scores.size() != n_tasks) {
            throw std::invalid_argument("aggregate: traces have mismatched task counts");
        }
        final_min_sum +=
            *std::min_element(trace.final_scores.begin(), trace.final_scores.end());
        for (size_t i = 0; i < n_tasks; ++i) {
            stats.mean_final_scores[i] += trace.final_scores[i];
        }
    }

    stats.median_steps = median(steps);
    double mean = 0.0;
    for (double s : steps) mean += s;
    mean /= static_cast<double>(steps.size());
    stats.mean_steps = mean;
    double var = 0.0;
    for (double s : steps) var += (s - mean) * (s - mean);
    stats.std_steps = std::sqrt(var / static_cast<double>(steps.size()));
    stats.mean_final_min = final_min_sum / static_cast<double>(traces.size());
    for (auto& v : stats.mean_final_scores) v /= static_cast<double>(traces.size());
    return stats;
}

}  // namespace tscl
