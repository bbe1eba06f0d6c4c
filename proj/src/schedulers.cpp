#include "tscl/schedulers.hpp"

#include <stdexcept>

namespace tscl {

UniformScheduler::UniformScheduler(int n_tasks, Formulation formulation, uint64_t seed)
    : n_(n_tasks), formulation_(formulation), rng_(seed) {
    if (n_tasks < 1) {
        throw std::invalid_argument("UniformScheduler: need at least one task");
    }
}

TeacherAction UniformScheduler::next() {
    if (formulation_ == Formulation::Simple) {
        return TeacherAction::single(TaskId{rng_.uniform_int(n_)});
    }
    return TeacherAction::distribution(std::vector<double>(static_cast<size_t>(n_), 1.0 / n_));
}

ManualScheduler::ManualScheduler(int n_tasks, std::vector<ManualEntry> schedule)
    : n_(n_tasks), schedule_(std::move(schedule)) {
    if (n_tasks < 1) {
        throw std::invalid_argument("ManualScheduler: need at least one task");
    }
    if (schedule_.empty()) {
        throw std::invalid_argument("ManualScheduler: schedule must not be empty");
    }
    for (const auto& e : schedule_) {
        if (e.task.index < 0 || e.task.index >= n_tasks) {
            throw std::invalid_argument("ManualScheduler: schedule task out of range");
        }
        if (e.steps < 1) {
            throw std::invalid_argument("ManualScheduler: schedule steps must be >= 1");
        }
    }
}

TeacherAction ManualScheduler::next() {
    while (entry_ + 1 < schedule_.size() && used_in_entry_ >= schedule_[entry_].steps) {
        ++entry_;
        used_in_entry_ = 0;
    }
    ++used_in_entry_;
    return TeacherAction::single(schedule_[entry_].task);
}

int64_t ManualScheduler::total_steps() const {
    int64_t total = 0;
    for (const auto& e : schedule_) total += e.steps;
    return total;
}

FinalTaskScheduler::FinalTaskScheduler(int n_tasks) : n_(n_tasks) {
    if (n_tasks < 1) {
        throw std::invalid_argument("FinalTaskScheduler: need at least one task");
    }
}

}  // namespace tscl
