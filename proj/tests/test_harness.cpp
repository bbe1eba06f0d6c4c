#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "tscl/config.hpp"
#include "tscl/experiment.hpp"
#include "tscl/io.hpp"
#include "tscl/sweep.hpp"

using namespace tscl;

namespace {

ExperimentConfig chain_experiment() {
    ExperimentConfig cfg;
    cfg.student.kind = StudentKind::Chain;
    cfg.teacher.kind = TeacherKind::Uniform;
    cfg.teacher.name = "uniform";
    cfg.max_steps = 20000;
    return cfg;
}

RunTrace synthetic_simple_trace(const std::vector<int>& tasks, const std::vector<double>& scores) {
    RunTrace trace;
    trace.max_steps = static_cast<int64_t>(tasks.size());
    std::vector<double> last(8, 0.0);
    for (size_t i = 0; i < tasks.size(); ++i) {
        StepRecord step;
        step.t = static_cast<int64_t>(i + 1);
        step.action = TeacherAction::single(TaskId{tasks[i]});
        step.obs = TeacherObservation::single(TaskId{tasks[i]}, scores[i]);
        step.reward = scores[i] - last[static_cast<size_t>(tasks[i])];
        last[static_cast<size_t>(tasks[i])] = scores[i];
        trace.teacher_return += step.reward;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

}  // namespace

TEST_CASE("run_session: final-task-only never opens the chain's last gate") {
    ExperimentConfig cfg = chain_experiment();
    cfg.student.chain.noise_sigma = 0.0;
    cfg.teacher.kind = TeacherKind::FinalTaskOnly;
    cfg.max_steps = 2000;
    const auto trace = run_session(cfg, 0);
    CHECK_FALSE(trace.steps_to_mastery.has_value());
    CHECK(trace.final_scores[4] == 0.0);
    CHECK(trace.steps.size() == 2000);
}

TEST_CASE("run_session: zero budget gives an empty trace") {
    ExperimentConfig cfg = chain_experiment();
    cfg.max_steps = 0;
    const auto trace = run_session(cfg, 0);
    CHECK(trace.steps.empty());
    CHECK_FALSE(trace.steps_to_mastery.has_value());
    CHECK(trace.final_scores == std::vector<double>(5, 0.0));
    CHECK(trace.teacher_return == 0.0);
}

TEST_CASE("run_session: uniform teacher masters the default chain") {
    ExperimentConfig cfg = chain_experiment();
    const auto trace = run_session(cfg, 0);
    REQUIRE(trace.steps_to_mastery.has_value());
    CHECK(*trace.steps_to_mastery < 20000);
    for (double s : trace.final_scores) {
        CHECK(s >= 0.99);
    }
    // Regression pin for the default config at seed 0.
    CHECK(*trace.steps_to_mastery == 2907);
}

TEST_CASE("run_session: rejects bad configs before the loop") {
    ExperimentConfig cfg = chain_experiment();
    cfg.mastery_threshold = 0.0;
    CHECK_THROWS_AS(run_session(cfg, 0), std::invalid_argument);

    ExperimentConfig manual = chain_experiment();
    manual.teacher.kind = TeacherKind::Manual;
    manual.teacher.schedule = {{TaskId{0}, 60}, {TaskId{1}, 60}};
    manual.max_steps = 100;
    CHECK_THROWS_AS(run_session(manual, 0), std::invalid_argument);

    ExperimentConfig batch_manual = chain_experiment();
    batch_manual.teacher.kind = TeacherKind::Manual;
    batch_manual.teacher.formulation = Formulation::Batch;
    batch_manual.teacher.schedule = {{TaskId{0}, 10}};
    CHECK_THROWS_AS(run_session(batch_manual, 0), std::invalid_argument);
}

TEST_CASE("run_session: manual schedule plays back in order and then holds") {
    ExperimentConfig cfg = chain_experiment();
    cfg.teacher.kind = TeacherKind::Manual;
    cfg.teacher.schedule = {{TaskId{0}, 3}, {TaskId{2}, 2}};
    cfg.max_steps = 8;
    const auto trace = run_session(cfg, 1);
    REQUIRE(trace.steps.size() == 8);
    const int expected[] = {0, 0, 0, 2, 2, 2, 2, 2};
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].action.task().index == expected[i]);
    }
}

TEST_CASE("telescoping: cumulative reward equals the sum of last scores") {
    const auto trace = synthetic_simple_trace({0, 0, 0}, {0.2, 0.5, 0.9});
    CHECK(trace.teacher_return == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(telescoping_check(trace));

    RunTrace empty;
    CHECK(telescoping_check(empty));

    auto broken = synthetic_simple_trace({0, 1, 0}, {0.2, 0.5, 0.9});
    broken.steps[1].reward += 0.1;
    CHECK_FALSE(telescoping_check(broken));
}

TEST_CASE("telescoping: holds on real simple-formulation runs") {
    const Algorithm algs[] = {Algorithm::Online, Algorithm::Naive, Algorithm::Window,
                              Algorithm::Sampling};
    for (int seed = 0; seed < 20; ++seed) {
        ExperimentConfig cfg = chain_experiment();
        cfg.teacher.kind = TeacherKind::Tscl;
        cfg.teacher.config.algorithm = algs[seed % 4];
        cfg.teacher.config.policy = seed % 2 ? PolicyKind::Boltzmann : PolicyKind::EpsGreedy;
        cfg.max_steps = 1000;
        const auto trace = run_session(cfg, static_cast<uint64_t>(seed));
        CHECK(telescoping_check(trace));
    }
}

TEST_CASE("telescoping: rejects batch traces") {
    ExperimentConfig cfg = chain_experiment();
    cfg.teacher.kind = TeacherKind::Tscl;
    cfg.teacher.config.formulation = Formulation::Batch;
    cfg.max_steps = 10;
    const auto trace = run_session(cfg, 0);
    CHECK_THROWS_AS(telescoping_check(trace), std::logic_error);
}

TEST_CASE("batch runs: teacher_return equals the reward column sum") {
    ExperimentConfig cfg = chain_experiment();
    cfg.teacher.kind = TeacherKind::Tscl;
    cfg.teacher.config.formulation = Formulation::Batch;
    cfg.teacher.config.algorithm = Algorithm::Online;
    cfg.max_steps = 200;
    const auto trace = run_session(cfg, 3);
    double sum = 0.0;
    for (const auto& step : trace.steps) {
        REQUIRE_FALSE(step.action.is_single());
        sum += step.reward;
    }
    CHECK(trace.teacher_return == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("aggregate: single trace and simple statistics") {
    RunTrace one;
    one.max_steps = 500;
    one.steps_to_mastery = 123;
    one.final_scores = {1.0, 0.5};
    const auto single = aggregate("x", {one});
    CHECK(single.mean_steps == 123.0);
    CHECK(single.median_steps == 123.0);
    CHECK(single.std_steps == 0.0);
    CHECK(single.n_mastered == 1);
    CHECK(single.mean_final_min == 0.5);

    std::vector<RunTrace> traces(3);
    const int64_t steps[] = {100, 300, 200};
    for (size_t i = 0; i < 3; ++i) {
        traces[i].max_steps = 1000;
        traces[i].steps_to_mastery = steps[i];
        traces[i].final_scores = {1.0};
    }
    const auto stats = aggregate("y", traces);
    CHECK(stats.mean_steps == 200.0);
    CHECK(stats.median_steps == 200.0);

    traces[2].steps_to_mastery.reset();  // counts as max_steps, flagged
    const auto capped = aggregate("z", traces);
    CHECK(capped.n_mastered == 2);
    CHECK(capped.mean_steps == doctest::Approx((100.0 + 300.0 + 1000.0) / 3.0));
}

TEST_CASE("config: full experiment round-trip") {
    const std::string text = R"(
# chain experiment
student.kind = chain
student.n_tasks = 5
student.forget_rate = 0.005
teacher.kind = tscl
teacher.algorithm = window
teacher.policy = boltzmann
teacher.formulation = simple
teacher.alpha = 0.2
teacher.use_abs = false
run.max_steps = 1234
run.mastery_threshold = 0.95
run.seeds = 0..3
)";
    const auto cfg = parse_experiment_config(text);
    CHECK(cfg.student.kind == StudentKind::Chain);
    CHECK(cfg.student.chain.forget_rate == 0.005);
    CHECK(cfg.teacher.kind == TeacherKind::Tscl);
    CHECK(cfg.teacher.config.algorithm == Algorithm::Window);
    CHECK(cfg.teacher.config.policy == PolicyKind::Boltzmann);
    CHECK(cfg.teacher.config.alpha == 0.2);
    CHECK(cfg.teacher.config.use_abs == false);
    CHECK(cfg.max_steps == 1234);
    CHECK(cfg.mastery_threshold == 0.95);
    CHECK(cfg.seeds == std::vector<uint64_t>{0, 1, 2, 3});
}

TEST_CASE("config: errors carry context") {
    CHECK_THROWS_AS(parse_experiment_config("student.kind = warp"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config("nonsense line"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config("unknown.key = 1"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config("run.max_steps = soon"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config("run.max_steps = 1\nrun.max_steps = 2"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config("teacher.kind = manual"), ConfigError);
    CHECK_THROWS_AS(parse_seed_list("5..1"), ConfigError);
    CHECK_THROWS_AS(parse_seed_list(""), ConfigError);
    CHECK(parse_seed_list("4,7") == std::vector<uint64_t>{4, 7});
}

TEST_CASE("config: sweep with named teacher variants") {
    const std::string text = R"(
student.kind = chain
run.max_steps = 100
run.seeds = 0..2
sweep.teachers = uni, win
teacher.uni.kind = uniform
teacher.win.kind = tscl
teacher.win.algorithm = window
)";
    const auto sweep = parse_sweep_config(text);
    REQUIRE(sweep.teachers.size() == 2);
    CHECK(sweep.teachers[0].name == "uni");
    CHECK(sweep.teachers[0].kind == TeacherKind::Uniform);
    CHECK(sweep.teachers[1].name == "win");
    CHECK(sweep.teachers[1].config.algorithm == Algorithm::Window);
    CHECK(sweep.base.seeds.size() == 3);
}

TEST_CASE("io: trace csv uses the flat schema") {
    ExperimentConfig cfg = chain_experiment();
    cfg.max_steps = 3;
    const auto trace = run_session(cfg, 0);
    const auto csv = trace_csv(trace);
    const std::string header = csv.substr(0, csv.find('\n'));
    CHECK(header ==
          "t,action,reward,score_0,score_1,score_2,score_3,score_4,q_0,q_1,q_2,q_3,q_4");
    // One line per step plus the header.
    size_t lines = 0;
    for (char c : csv) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 4);
}

TEST_CASE("io: distributions serialize into the action column") {
    ExperimentConfig cfg = chain_experiment();
    cfg.teacher.kind = TeacherKind::Uniform;
    cfg.teacher.formulation = Formulation::Batch;
    cfg.max_steps = 1;
    const auto trace = run_session(cfg, 0);
    const auto csv = trace_csv(trace);
    CHECK(csv.find("0.2|0.2|0.2|0.2|0.2") != std::string::npos);
}

TEST_CASE("io: format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 123456.789, -2.5e-9, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("determinism: identical seed and config give byte-identical output") {
    ExperimentConfig cfg = chain_experiment();
    cfg.teacher.kind = TeacherKind::Tscl;
    cfg.teacher.config.algorithm = Algorithm::Sampling;
    cfg.max_steps = 500;
    const auto a = run_session(cfg, 42);
    const auto b = run_session(cfg, 42);
    CHECK(trace_csv(a) == trace_csv(b));
    CHECK(summary_json(a, "t").dump() == summary_json(b, "t").dump());
}

TEST_CASE("determinism: parallel sweep equals serial sweep byte for byte") {
    SweepSpec spec;
    spec.base = chain_experiment();
    spec.base.max_steps = 400;
    spec.base.seeds = {0, 1, 2, 3, 4, 5, 6, 7};
    TeacherSpec uniform;
    uniform.kind = TeacherKind::Uniform;
    uniform.name = "uniform";
    TeacherSpec window;
    window.kind = TeacherKind::Tscl;
    window.config.algorithm = Algorithm::Window;
    window.name = "window";
    spec.teachers = {uniform, window};
    spec.base.teacher = uniform;

    const auto serial = run_sweep(spec, 1);
    const auto parallel = run_sweep(spec, 4);
    CHECK(aggregate_csv(serial.rows) == aggregate_csv(parallel.rows));
    CHECK(aggregate_json(serial.rows).dump() == aggregate_json(parallel.rows).dump());
    REQUIRE(serial.traces.size() == parallel.traces.size());
    for (size_t ti = 0; ti < serial.traces.size(); ++ti) {
        for (size_t si = 0; si < serial.traces[ti].size(); ++si) {
            CHECK(trace_csv(serial.traces[ti][si]) == trace_csv(parallel.traces[ti][si]));
        }
    }
}

TEST_CASE("compare: rows match by teacher name") {
    SweepSpec spec;
    spec.base = chain_experiment();
    spec.base.max_steps = 300;
    spec.base.seeds = {0, 1};
    TeacherSpec uniform;
    uniform.kind = TeacherKind::Uniform;
    uniform.name = "uniform";
    spec.teachers = {uniform};
    spec.base.teacher = uniform;

    const auto a = run_sweep(spec, 1);
    spec.base.max_steps = 600;
    const auto b = run_sweep(spec, 1);
    const auto rows = compare_summaries(aggregate_json(a.rows), aggregate_json(b.rows));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].name == "uniform");
    CHECK(rows[0].median_steps_a == a.rows[0].median_steps);
    CHECK(rows[0].median_steps_b == b.rows[0].median_steps);
}
