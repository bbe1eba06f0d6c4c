#pragma once

#include <stdexcept>
#include <utility>

namespace tscl {

/// Index of one subtask in [0, N).
struct TaskId {
    int index = 0;
    friend bool operator==(const TaskId&, const TaskId&) = default;
};

/// Discrete task set: linear, or an LxL grid flattened row-major.
class TaskSpace {
public:
    static TaskSpace linear(int n) {
        if (n < 1) throw std::invalid_argument("TaskSpace: need at least one task");
        return TaskSpace(1, n, false);
    }

    static TaskSpace grid(int rows, int cols) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("TaskSpace: grid dims must be positive");
        return TaskSpace(rows, cols, true);
    }

    int size() const { return rows_ * cols_; }
    bool is_grid() const { return grid_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool contains(TaskId t) const { return t.index >= 0 && t.index < size(); }

    TaskId at(int row, int col) const {
        if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
            throw std::out_of_range("TaskSpace::at: cell outside grid");
        }
        return TaskId{row * cols_ + col};
    }

    std::pair<int, int> coords(TaskId t) const {
        if (!contains(t)) throw std::out_of_range("TaskSpace::coords: task out of range");
        return {t.index / cols_, t.index % cols_};
    }

private:
    TaskSpace(int rows, int cols, bool grid) : rows_(rows), cols_(cols), grid_(grid) {}

    int rows_;
    int cols_;
    bool grid_;
};

}  // namespace tscl
