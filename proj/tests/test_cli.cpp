#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "tscl/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string tscl_bin() {
    const char* bin = std::getenv("TSCL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "TSCL_BIN must point at the tscl binary");
    return bin;
}

int run_command(const std::string& args) {
    const std::string cmd = tscl_bin() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::path("cli_test_tmp") / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

const char* kRunConfig = R"(
student.kind = chain
teacher.kind = tscl
teacher.algorithm = sampling
run.max_steps = 300
)";

const char* kSweepConfig = R"(
student.kind = chain
run.max_steps = 300
run.seeds = 0..3
sweep.teachers = uniform, sampling
teacher.uniform.kind = uniform
teacher.sampling.kind = tscl
teacher.sampling.algorithm = sampling
)";

}  // namespace

TEST_CASE("cli: run writes a trace and a summary") {
    TempDir dir("run");
    write(dir.path / "chain.cfg", kRunConfig);
    const int code =
        run_command("run --config " + dir.str() + "/chain.cfg --seed 0 --out " + dir.str());
    CHECK(code == 0);
    CHECK(fs::exists(dir.path / "trace_0.csv"));
    CHECK(fs::exists(dir.path / "summary_0.json"));
    const auto csv = tscl::read_file((dir.path / "trace_0.csv").string());
    CHECK(csv.rfind("t,action,reward,score_0", 0) == 0);
}

TEST_CASE("cli: run --format json writes a json trace") {
    TempDir dir("run_json");
    write(dir.path / "chain.cfg", kRunConfig);
    const int code = run_command("run --config " + dir.str() + "/chain.cfg --seed 2 --out " +
                                 dir.str() + " --format json");
    CHECK(code == 0);
    CHECK(fs::exists(dir.path / "trace_2.json"));
}

TEST_CASE("cli: unknown flags are usage errors") {
    CHECK(run_command("run --bogus") == 2);
    CHECK(run_command("fly --config x") == 2);
    CHECK(run_command("") == 2);
}

TEST_CASE("cli: missing or malformed configs are runtime errors") {
    TempDir dir("bad");
    CHECK(run_command("run --config " + dir.str() + "/absent.cfg --out " + dir.str()) == 1);
    write(dir.path / "broken.cfg", "this is not a config\n");
    CHECK(run_command("run --config " + dir.str() + "/broken.cfg --out " + dir.str()) == 1);
    write(dir.path / "unwritable.cfg", kRunConfig);
    CHECK(run_command("run --config " + dir.str() + "/unwritable.cfg --out /dev/null/nope") == 1);
}

TEST_CASE("cli: sweep aggregates one row per teacher") {
    TempDir dir("sweep");
    write(dir.path / "sweep.cfg", kSweepConfig);
    const int code = run_command("sweep --config " + dir.str() + "/sweep.cfg --out " + dir.str() +
                                 " --jobs 2 --quiet");
    CHECK(code == 0);
    REQUIRE(fs::exists(dir.path / "aggregate.csv"));
    const auto csv = tscl::read_file((dir.path / "aggregate.csv").string());
    size_t lines = 0;
    for (char c : csv) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 3);  // header + uniform + sampling
    CHECK(csv.find("uniform") != std::string::npos);
    CHECK(csv.find("sampling") != std::string::npos);
}

TEST_CASE("cli: compare reports relative improvement") {
    TempDir dir("compare");
    write(dir.path / "sweep.cfg", kSweepConfig);
    REQUIRE(run_command("sweep --config " + dir.str() + "/sweep.cfg --out " + dir.str() +
                        "/a --quiet") == 0);
    REQUIRE(run_command("sweep --config " + dir.str() + "/sweep.cfg --out " + dir.str() +
                        "/b --seeds 4..7 --quiet") == 0);
    const int code = run_command("compare " + dir.str() + "/a/aggregate.json " + dir.str() +
                                 "/b/aggregate.json --out " + dir.str() + "/cmp.csv --quiet");
    CHECK(code == 0);
    CHECK(fs::exists(dir.path / "cmp.csv"));
    const auto csv = tscl::read_file((dir.path / "cmp.csv").string());
    CHECK(csv.find("uniform") != std::string::npos);
}
