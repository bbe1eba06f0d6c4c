#include "tscl/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tscl {

std::string format_double(double v) {
    // nlohmann/json emits the shortest representation that round-trips.
    return nlohmann::json(v).dump();
}

namespace {

std::string format_action(const TeacherAction& action) {
    if (action.is_single()) {
        return std::to_string(action.task().index);
    }
    std::string out;
    const auto& p = action.probs();
    for (size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += '|';
        out += format_double(p[i]);
    }
    return out;
}

}  // namespace

std::string trace_csv(const RunTrace& trace) {
    size_t n = trace.final_scores.size();
    if (!trace.steps.empty()) {
        n = trace.steps.front().eval_scores.size();
    }
    std::string out = "t,action,reward";
    for (size_t i = 0; i < n; ++i) out += ",score_" + std::to_string(i);
    for (size_t i = 0; i < n; ++i) out += ",q_" + std::to_string(i);
    out += '\n';
    for (const auto& step : trace.steps) {
        out += std::to_string(step.t);
        out += ',';
        out += format_action(step.action);
        out += ',';
        out += format_double(step.reward);
        for (double s : step.eval_scores) {
            out += ',';
            out += format_double(s);
        }
        for (double q : step.q) {
            out += ',';
            out += format_double(q);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json trace_json(const RunTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        nlohmann::json j;
        j["t"] = step.t;
        if (step.action.is_single()) {
            j["action"] = step.action.task().index;
        } else {
            j["action"] = step.action.probs();
        }
        j["reward"] = step.reward;
        j["scores"] = step.eval_scores;
        j["q"] = step.q;
        steps.push_back(std::move(j));
    }
    nlohmann::json j;
    j["seed"] = trace.seed;
    j["max_steps"] = trace.max_steps;
    j["steps"] = std::move(steps);
    return j;
}

nlohmann::json summary_json(const RunTrace& trace, const std::string& teacher_name) {
    nlohmann::json j;
    j["teacher"] = teacher_name;
    j["seed"] = trace.seed;
    j["max_steps"] = trace.max_steps;
    j["steps_run"] = trace.steps.size();
    if (trace.steps_to_mastery) {
        j["steps_to_mastery"] = *trace.steps_to_mastery;
    } else {
        j["steps_to_mastery"] = nullptr;
    }
    j["mastered"] = trace.steps_to_mastery.has_value();
    j["final_scores"] = trace.final_scores;
    j["teacher_return"] = trace.teacher_return;
    return j;
}

nlohmann::json aggregate_json(const std::vector<AggregateStats>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j;
        j["teacher"] = row.name;
        j["n_runs"] = row.n_runs;
        j["n_mastered"] = row.n_mastered;
        j["median_steps"] = row.median_steps;
        j["mean_steps"] = row.mean_steps;
        j["std_steps"] = row.std_steps;
        j["mean_final_min"] = row.mean_final_min;
        j["mean_final_scores"] = row.mean_final_scores;
        out.push_back(std::move(j));
    }
    return nlohmann::json{{"rows", std::move(out)}};
}

std::string aggregate_csv(const std::vector<AggregateStats>& rows) {
    std::string out =
        "teacher,n_runs,n_mastered,median_steps,mean_steps,std_steps,mean_final_min\n";
    for (const auto& row : rows) {
        out += row.name;
        out += ',' + std::to_string(row.n_runs);
        out += ',' + std::to_string(row.n_mastered);
        out += ',' + format_double(row.median_steps);
        out += ',' + format_double(row.mean_steps);
        out += ',' + format_double(row.std_steps);
        out += ',' + format_double(row.mean_final_min);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << contents;
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace tscl
