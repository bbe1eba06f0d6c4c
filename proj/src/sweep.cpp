#include "tscl/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace tscl {

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
    const auto& seeds = spec.base.seeds;
    if (seeds.empty()) {
        throw std::invalid_argument("run_sweep: need at least one seed");
    }
    if (spec.teachers.empty()) {
        throw std::invalid_argument("run_sweep: need at least one teacher");
    }

    struct Job {
        size_t teacher;
        size_t seed;
    };
    std::vector<Job> work;
    for (size_t ti = 0; ti < spec.teachers.size(); ++ti) {
        for (size_t si = 0; si < seeds.size(); ++si) {
            work.push_back({ti, si});
        }
    }

    SweepResult result;
    result.traces.resize(spec.teachers.size());
    for (auto& per_teacher : result.traces) {
        per_teacher.resize(seeds.size());
    }

    if (jobs <= 0) {
        jobs = static_cast<int>(std::thread::hardware_concurrency());
        if (jobs < 1) jobs = 1;
    }
    jobs = std::min<int>(jobs, static_cast<int>(work.size()));

    // Each run writes to its own preallocated slot, so scheduling order
    // cannot affect the result.
    std::atomic<size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            const size_t i = cursor.fetch_add(1);
            if (i >= work.size() || failed.load()) return;
            const Job job = work[i];
            ExperimentConfig cfg = spec.base;
            cfg.teacher = spec.teachers[job.teacher];
            try {
                result.traces[job.teacher][job.seed] = run_session(cfg, seeds[job.seed]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) {
                    error = e.what();
                }
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(jobs));
        for (int i = 0; i < jobs; ++i) {
            threads.emplace_back(worker);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    if (failed.load()) {
        throw std::runtime_error("run_sweep: " + error);
    }

    for (size_t ti = 0; ti < spec.teachers.size(); ++ti) {
        result.rows.push_back(aggregate(spec.teachers[ti].name, result.traces[ti]));
    }
    return result;
}

namespace {

struct SummaryRow {
    std::string name;
    double median_steps = 0.0;
    double final_min = 0.0;
};

std::vector<SummaryRow> summary_rows(const nlohmann::json& j) {
    std::vector<SummaryRow> rows;
    if (j.contains("rows")) {
        for (const auto& row : j.at("rows")) {
            SummaryRow r;
            r.name = row.at("teacher").get<std::string>();
            r.median_steps = row.at("median_steps").get<double>();
            r.final_min = row.at("mean_final_min").get<double>();
            rows.push_back(std::move(r));
        }
        return rows;
    }
    // A single-run summary from `run` becomes one row.
    SummaryRow r;
    r.name = j.at("teacher").get<std::string>();
    if (j.at("steps_to_mastery").is_null()) {
        r.median_steps = j.at("max_steps").get<double>();
    } else {
        r.median_steps = j.at("steps_to_mastery").get<double>();
    }
    double final_min = 1.0;
    for (const auto& s : j.at("final_scores")) {
        final_min = std::min(final_min, s.get<double>());
    }
    r.final_min = final_min;
    rows.push_back(std::move(r));
    return rows;
}

double rel_change(double a, double b) {
    if (a == 0.0) return 0.0;
    return (b - a) / a;
}

}  // namespace

std::vector<CompareRow> compare_summaries(const nlohmann::json& a, const nlohmann::json& b) {
    const auto rows_a = summary_rows(a);
    const auto rows_b = summary_rows(b);
    std::vector<CompareRow> out;
    for (const auto& ra : rows_a) {
        for (const auto& rb : rows_b) {
            if (ra.name != rb.name) continue;
            CompareRow row;
            row.name = ra.name;
            row.median_steps_a = ra.median_steps;
            row.median_steps_b = rb.median_steps;
            row.steps_change = rel_change(ra.median_steps, rb.median_steps);
            row.final_min_a = ra.final_min;
            row.final_min_b = rb.final_min;
            row.final_min_change = rel_change(ra.final_min, rb.final_min);
            out.push_back(std::move(row));
        }
    }
    if (out.empty()) {
        throw std::runtime_error("compare: no teacher names in common");
    }
    return out;
}

std::string compare_table(const std::vector<CompareRow>& rows) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-16s %14s %14s %9s %12s %12s %9s\n", "teacher",
                  "median_steps_a", "median_steps_b", "change", "final_min_a", "final_min_b",
                  "change");
    out += buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-16s %14.1f %14.1f %8.1f%% %12.4f %12.4f %8.1f%%\n",
                      r.name.c_str(), r.median_steps_a, r.median_steps_b,
                      100.0 * r.steps_change, r.final_min_a, r.final_min_b,
                      100.0 * r.final_min_change);
        out += buf;
    }
    return out;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
    std::string out =
        "teacher,median_steps_a,median_steps_b,steps_change,final_min_a,final_min_b,"
        "final_min_change\n";
    for (const auto& r : rows) {
        out += r.name;
        out += ',' + std::to_string(r.median_steps_a);
        out += ',' + std::to_string(r.median_steps_b);
        out += ',' + std::to_string(r.steps_change);
        out += ',' + std::to_string(r.final_min_a);
        out += ',' + std::to_string(r.final_min_b);
        out += ',' + std::to_string(r.final_min_change);
        out += '\n';
    }
    return out;
}

}  // namespace tscl
