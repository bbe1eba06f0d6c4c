#include "tscl/qtable.hpp"

#include <cmath>
#include <stdexcept>

namespace tscl {

QTable::QTable(int n_tasks, double alpha) : q_(static_cast<size_t>(n_tasks), 0.0), alpha_(alpha) {
    if (n_tasks < 1) {
        throw std::invalid_argument("QTable: need at least one task");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("QTable: alpha must lie in (0, 1]");
    }
}

void QTable::update(TaskId task, double reward) {
    check_task(task);
    if (!std::isfinite(reward)) {
        throw std::domain_error("QTable::update: reward must be finite");
    }
    double& q = q_[static_cast<size_t>(task.index)];
    q = alpha_ * reward + (1.0 - alpha_) * q;
}

void QTable::update_all(std::span<const double> rewards) {
    if (rewards.size() != q_.size()) {
        throw std::invalid_argument("QTable::update_all: reward vector length mismatch");
    }
    for (double r : rewards) {
        if (!std::isfinite(r)) {
            throw std::domain_error("QTable::update_all: reward must be finite");
        }
    }
    for (size_t i = 0; i < q_.size(); ++i) {
        q_[i] = alpha_ * rewards[i] + (1.0 - alpha_) * q_[i];
    }
}

double QTable::at(TaskId task) const {
    check_task(task);
    return q_[static_cast<size_t>(task.index)];
}

void QTable::check_task(TaskId task) const {
    if (task.index < 0 || task.index >= size()) {
        throw std::out_of_range("QTable: task index out of range");
    }
}

}  // namespace tscl
