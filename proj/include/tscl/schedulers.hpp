#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tscl/rng.hpp"
#include "tscl/teacher.hpp"

namespace tscl {

/// Anything that can drive a training session: the TSCL teacher or one of
/// the uniform / manual / final-task-only baselines.
class TaskScheduler {
public:
    virtual ~TaskScheduler() = default;

    virtual TeacherAction next() = 0;
    virtual void observe(const TeacherAction& action, const TeacherObservation& obs, int64_t t) {
        (void)action;
        (void)obs;
        (void)t;
    }
    virtual std::vector<double> q_snapshot() const {
        return std::vector<double>(static_cast<size_t>(num_tasks()), 0.0);
    }
    virtual int num_tasks() const = 0;
    virtual Formulation formulation() const = 0;
};

/// TSCL teacher behind the scheduler interface.
class TeacherScheduler : public TaskScheduler {
public:
    TeacherScheduler(int n_tasks, const TeacherConfig& cfg) : teacher_(n_tasks, cfg) {}

    TeacherAction next() override { return teacher_.next(); }
    void observe(const TeacherAction& action, const TeacherObservation& obs, int64_t t) override {
        teacher_.observe(action, obs, t);
    }
    std::vector<double> q_snapshot() const override { return teacher_.q_snapshot(); }
    int num_tasks() const override { return teacher_.num_tasks(); }
    Formulation formulation() const override { return teacher_.config().formulation; }

    const Teacher& teacher() const { return teacher_; }

private:
    Teacher teacher_;
};

/// Uniform random task (simple) or the uniform distribution (batch).
class UniformScheduler : public TaskScheduler {
public:
    UniformScheduler(int n_tasks, Formulation formulation, uint64_t seed);

    TeacherAction next() override;
    int num_tasks() const override { return n_; }
    Formulation formulation() const override { return formulation_; }

private:
    int n_;
    Formulation formulation_;
    Rng rng_;
};

struct ManualEntry {
    TaskId task;
    int64_t steps = 0;
};

/// Fixed hand-written curriculum; after the schedule is exhausted it keeps
/// training the last entry's task. Simple formulation only.
class ManualScheduler : public TaskScheduler {
public:
    ManualScheduler(int n_tasks, std::vector<ManualEntry> schedule);

    TeacherAction next() override;
    int num_tasks() const override { return n_; }
    Formulation formulation() const override { return Formulation::Simple; }

    int64_t total_steps() const;

private:
    int n_;
    std::vector<ManualEntry> schedule_;
    size_t entry_ = 0;
    int64_t used_in_entry_ = 0;
};

/// Always trains the last task. Simple formulation only.
class FinalTaskScheduler : public TaskScheduler {
public:
    explicit FinalTaskScheduler(int n_tasks);

    TeacherAction next() override { return TeacherAction::single(TaskId{n_ - 1}); }
    int num_tasks() const override { return n_; }
    Formulation formulation() const override { return Formulation::Simple; }

private:
    int n_;
};

}  // namespace tscl
