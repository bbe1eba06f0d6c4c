#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tscl/schedulers.hpp"
#include "tscl/students.hpp"
#include "tscl/teacher.hpp"

namespace tscl {

enum class StudentKind { Chain, Grid2D, ChainMdp };
enum class TeacherKind { Tscl, Uniform, Manual, FinalTaskOnly };

struct StudentSpec {
    StudentKind kind = StudentKind::Chain;
    ChainStudentConfig chain;
    Grid2DStudentConfig grid;
    ChainMdpConfig mdp;
};

struct TeacherSpec {
    TeacherKind kind = TeacherKind::Tscl;
    TeacherConfig config;                           // TSCL settings
    Formulation formulation = Formulation::Simple;  // used by baselines
    std::vector<ManualEntry> schedule;              // Manual only
    std::string name = "teacher";                   // row label in sweeps

    Formulation effective_formulation() const {
        return kind == TeacherKind::Tscl ? config.formulation : formulation;
    }
};

struct ExperimentConfig {
    StudentSpec student;
    TeacherSpec teacher;
    int64_t max_steps = 20000;
    double mastery_threshold = 0.99;
    std::vector<uint64_t> seeds = {0};
};

struct StepRecord {
    int64_t t = 0;
    TeacherAction action;
    TeacherObservation obs;
    double reward = 0.0;  // score change for the trained task(s), prior score 0
    std::vector<double> eval_scores;
    std::vector<double> q;
};

struct RunTrace {
    uint64_t seed = 0;
    int64_t max_steps = 0;
    std::vector<StepRecord> steps;
    std::optional<int64_t> steps_to_mastery;
    std::vector<double> final_scores;
    double teacher_return = 0.0;
};

std::unique_ptr<Student> make_student(const StudentSpec& spec);
std::unique_ptr<TaskScheduler> make_scheduler(const TeacherSpec& spec, int n_tasks,
                                              uint64_t seed);

/// One seeded training session: next-action, student-train, observe, until
/// every task's evaluation score reaches the mastery threshold or the step
/// budget runs out. Deterministic given (cfg, seed).
RunTrace run_session(const ExperimentConfig& cfg, uint64_t seed);

/// Cumulative reward equals the sum of each task's last observed score
/// (within tol). Only defined for simple-formulation traces.
bool telescoping_check(const RunTrace& trace, double tol = 1e-9);

struct AggregateStats {
    std::string name;
    int n_runs = 0;
    int n_mastered = 0;  // runs that reached mastery; others count as max_steps
    double median_steps = 0.0;
    double mean_steps = 0.0;
    double std_steps = 0.0;
    double mean_final_min = 0.0;
    std::vector<double> mean_final_scores;
};

AggregateStats aggregate(const std::string& name, const std::vector<RunTrace>& traces);

double median(std::vector<double> values);

}  // namespace tscl
