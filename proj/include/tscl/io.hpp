#pragma once

#include <string>

#include <json.hpp>

#include "tscl/experiment.hpp"

namespace tscl {

/// Shortest round-trip decimal representation, identical across runs.
std::string format_double(double v);

/// CSV with header t,action,reward,score_0..score_{N-1},q_0..q_{N-1}.
/// Distributions are serialized as p_0|p_1|... in the action column; the
/// score columns hold the per-step evaluation snapshot.
std::string trace_csv(const RunTrace& trace);

nlohmann::json trace_json(const RunTrace& trace);
nlohmann::json summary_json(const RunTrace& trace, const std::string& teacher_name);

nlohmann::json aggregate_json(const std::vector<AggregateStats>& rows);
std::string aggregate_csv(const std::vector<AggregateStats>& rows);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace tscl
