#pragma once

#include <span>
#include <vector>

#include "tscl/task_space.hpp"

namespace tscl {

/// Exponentially weighted moving average of per-task rewards:
/// Q(a) <- alpha * r + (1 - alpha) * Q(a). Starts at zero for every task.
class QTable {
public:
    QTable(int n_tasks, double alpha);

    void update(TaskId task, double reward);
    void update_all(std::span<const double> rewards);

    double at(TaskId task) const;
    std::span<const double> values() const { return q_; }
    double alpha() const { return alpha_; }
    int size() const { return static_cast<int>(q_.size()); }

private:
    void check_task(TaskId task) const;

    std::vector<double> q_;
    double alpha_;
};

}  // namespace tscl
