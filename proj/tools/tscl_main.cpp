// tscl — run and compare curriculum-teaching experiments on simulated
// students. Subcommands: run (one config + seed), sweep (config x seeds,
// parallel), compare (two summary files).

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tscl/config.hpp"
#include "tscl/io.hpp"
#include "tscl/sweep.hpp"

namespace fs = std::filesystem;

namespace {

struct RunOptions {
    std::string config_path;
    uint64_t seed = 0;
    bool seed_given = false;
    std::string out_dir;
    std::string format = "csv";
    bool quiet = false;
};

struct SweepOptions {
    std::string config_path;
    std::string seeds;
    std::string out_dir;
    std::string format = "csv";
    int jobs = 0;
    bool quiet = false;
};

struct CompareOptions {
    std::string path_a;
    std::string path_b;
    std::string out_path;
    bool quiet = false;
};

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory '" + dir + "'");
    }
}

int do_run(const RunOptions& opt) {
    auto cfg = tscl::load_experiment_config(opt.config_path);
    const uint64_t seed = opt.seed_given ? opt.seed : cfg.seeds.front();
    ensure_out_dir(opt.out_dir);

    const auto trace = tscl::run_session(cfg, seed);
    const std::string stem = opt.out_dir + "/trace_" + std::to_string(seed);
    if (opt.format == "json") {
        tscl::write_file(stem + ".json", tscl::trace_json(trace).dump(2) + "\n");
    } else {
        tscl::write_file(stem + ".csv", tscl::trace_csv(trace));
    }
    const auto summary = tscl::summary_json(trace, cfg.teacher.name);
    tscl::write_file(opt.out_dir + "/summary_" + std::to_string(seed) + ".json",
                     summary.dump(2) + "\n");

    if (!opt.quiet) {
        const std::string mastery =
            trace.steps_to_mastery ? "mastered at step " + std::to_string(*trace.steps_to_mastery)
                                   : "not mastered";
        std::printf("seed %llu: %zu steps, %s, teacher_return %s\n",
                    static_cast<unsigned long long>(seed), trace.steps.size(), mastery.c_str(),
                    tscl::format_double(trace.teacher_return).c_str());
    }
    return 0;
}

int do_sweep(const SweepOptions& opt) {
    auto spec = tscl::load_sweep_config(opt.config_path);
    if (!opt.seeds.empty()) {
        spec.base.seeds = tscl::parse_seed_list(opt.seeds);
    }
    ensure_out_dir(opt.out_dir);

    const auto result = tscl::run_sweep(spec, opt.jobs);
    if (opt.format == "json") {
        tscl::write_file(opt.out_dir + "/aggregate.json",
                         tscl::aggregate_json(result.rows).dump(2) + "\n");
    } else {
        tscl::write_file(opt.out_dir + "/aggregate.csv", tscl::aggregate_csv(result.rows));
        tscl::write_file(opt.out_dir + "/aggregate.json",
                         tscl::aggregate_json(result.rows).dump(2) + "\n");
    }

    if (!opt.quiet) {
        std::printf("%s", tscl::aggregate_csv(result.rows).c_str());
    }
    return 0;
}

int do_compare(const CompareOptions& opt) {
    const auto a = nlohmann::json::parse(tscl::read_file(opt.path_a));
    const auto b = nlohmann::json::parse(tscl::read_file(opt.path_b));
    const auto rows = tscl::compare_summaries(a, b);
    if (!opt.out_path.empty()) {
        tscl::write_file(opt.out_path, tscl::compare_csv(rows));
    }
    if (!opt.quiet) {
        std::printf("%s", tscl::compare_table(rows).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Teacher-student curriculum experiments on simulated students"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "Run one config with one seed");
    run->add_option("--config", run_opt.config_path, "Experiment config file")->required();
    auto* seed_opt = run->add_option("--seed", run_opt.seed, "Session seed");
    run->add_option("--out", run_opt.out_dir, "Output directory")->required();
    run->add_option("--format", run_opt.format, "Trace format")
        ->check(CLI::IsMember({"csv", "json"}));
    run->add_flag("--quiet", run_opt.quiet, "Suppress the summary line");

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Run config x seeds, aggregate");
    sweep->add_option("--config", sweep_opt.config_path, "Sweep config file")->required();
    sweep->add_option("--seeds", sweep_opt.seeds, "Seed list, A..B or a,b,c");
    sweep->add_option("--out", sweep_opt.out_dir, "Output directory")->required();
    sweep->add_option("--jobs", sweep_opt.jobs, "Worker threads (0 = all cores)");
    sweep->add_option("--format", sweep_opt.format, "Aggregate format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_flag("--quiet", sweep_opt.quiet, "Suppress the aggregate table");

    CompareOptions compare_opt;
    auto* compare = app.add_subcommand("compare", "Relative improvement between two summaries");
    compare->add_option("a", compare_opt.path_a, "First summary JSON")->required();
    compare->add_option("b", compare_opt.path_b, "Second summary JSON")->required();
    compare->add_option("--out", compare_opt.out_path, "Write the table as CSV");
    compare->add_flag("--quiet", compare_opt.quiet, "Suppress stdout table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    run_opt.seed_given = seed_opt->count() > 0;

    try {
        if (run->parsed()) return do_run(run_opt);
        if (sweep->parsed()) return do_sweep(sweep_opt);
        if (compare->parsed()) return do_compare(compare_opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
