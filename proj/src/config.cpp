#include "tscl/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace tscl {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

// Key-value map that tracks which keys were consumed, so typos surface as
// "unknown key" errors instead of silently keeping defaults.
class KeyValues {
public:
    explicit KeyValues(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": expected key=value, got '" + line + "'");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) {
                throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
            }
            if (!entries_.emplace(key, value).second) {
                throw ConfigError("config: duplicate key '" + key + "'");
            }
        }
    }

    bool has(const std::string& key) const { return entries_.count(key) > 0; }

    std::string get(const std::string& key, const std::string& fallback) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return fallback;
        consumed_.insert(key);
        return it->second;
    }

    std::string require(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            throw ConfigError("config: missing required key '" + key + "'");
        }
        consumed_.insert(key);
        return it->second;
    }

    double get_double(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        return to_double(key, get(key, ""));
    }

    int64_t get_int(const std::string& key, int64_t fallback) {
        if (!has(key)) return fallback;
        return to_int(key, get(key, ""));
    }

    bool get_bool(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const std::string v = get(key, "");
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        throw ConfigError("config: key '" + key + "' expects true/false, got '" + v + "'");
    }

    void check_all_consumed() const {
        for (const auto& [key, value] : entries_) {
            if (consumed_.count(key) == 0) {
                throw ConfigError("config: unknown key '" + key + "'");
            }
        }
    }

    static double to_double(const std::string& key, const std::string& v) {
        try {
            size_t pos = 0;
            const double d = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("trailing");
            return d;
        } catch (const std::exception&) {
            throw ConfigError("config: key '" + key + "' expects a number, got '" + v + "'");
        }
    }

    static int64_t to_int(const std::string& key, const std::string& v) {
        int64_t out = 0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || ptr != v.data() + v.size()) {
            throw ConfigError("config: key '" + key + "' expects an integer, got '" + v + "'");
        }
        return out;
    }

private:
    std::map<std::string, std::string> entries_;
    std::set<std::string> consumed_;
};

StudentSpec parse_student(KeyValues& kv) {
    StudentSpec spec;
    const std::string kind = kv.get("student.kind", "chain");
    if (kind == "chain") {
        spec.kind = StudentKind::Chain;
        spec.chain.n_tasks = static_cast<int>(kv.get_int("student.n_tasks", spec.chain.n_tasks));
        spec.chain.learn_rate = kv.get_double("student.learn_rate", spec.chain.learn_rate);
        spec.chain.gate_threshold =
            kv.get_double("student.gate_threshold", spec.chain.gate_threshold);
        spec.chain.forget_rate = kv.get_double("student.forget_rate", spec.chain.forget_rate);
        spec.chain.noise_sigma = kv.get_double("student.noise_sigma", spec.chain.noise_sigma);
    } else if (kind == "grid2d") {
        spec.kind = StudentKind::Grid2D;
        spec.grid.side = static_cast<int>(kv.get_int("student.side", spec.grid.side));
        spec.grid.learn_rate = kv.get_double("student.learn_rate", spec.grid.learn_rate);
        spec.grid.gate_threshold =
            kv.get_double("student.gate_threshold", spec.grid.gate_threshold);
        spec.grid.forget_rate = kv.get_double("student.forget_rate", spec.grid.forget_rate);
        spec.grid.noise_sigma = kv.get_double("student.noise_sigma", spec.grid.noise_sigma);
    } else if (kind == "chain_mdp") {
        spec.kind = StudentKind::ChainMdp;
        if (kv.has("student.chain_lengths")) {
            spec.mdp.chain_lengths.clear();
            for (const auto& item : split(kv.get("student.chain_lengths", ""), ',')) {
                spec.mdp.chain_lengths.push_back(
                    static_cast<int>(KeyValues::to_int("student.chain_lengths", item)));
            }
        }
        spec.mdp.episode_cap =
            static_cast<int>(kv.get_int("student.episode_cap", spec.mdp.episode_cap));
        spec.mdp.q_learn_rate = kv.get_double("student.q_learn_rate", spec.mdp.q_learn_rate);
        spec.mdp.explore_eps = kv.get_double("student.explore_eps", spec.mdp.explore_eps);
        spec.mdp.step_penalty = kv.get_double("student.step_penalty", spec.mdp.step_penalty);
        spec.mdp.goal_reward = kv.get_double("student.goal_reward", spec.mdp.goal_reward);
        spec.mdp.eval_episodes =
            static_cast<int>(kv.get_int("student.eval_episodes", spec.mdp.eval_episodes));
    } else {
        throw ConfigError("config: unknown student.kind '" + kind + "'");
    }
    return spec;
}

std::vector<ManualEntry> parse_schedule(const std::string& text) {
    std::vector<ManualEntry> schedule;
    for (const auto& item : split(text, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("config: schedule entries are task:steps, got '" + item + "'");
        }
        ManualEntry e;
        e.task.index =
            static_cast<int>(KeyValues::to_int("teacher.schedule", trim(item.substr(0, colon))));
        e.steps = KeyValues::to_int("teacher.schedule", trim(item.substr(colon + 1)));
        schedule.push_back(e);
    }
    return schedule;
}

Formulation parse_formulation(const std::string& v) {
    if (v == "simple") return Formulation::Simple;
    if (v == "batch") return Formulation::Batch;
    throw ConfigError("config: unknown formulation '" + v + "'");
}

TeacherSpec parse_teacher(KeyValues& kv, const std::string& prefix, const std::string& name) {
    TeacherSpec spec;
    spec.name = name;
    const std::string kind = kv.get(prefix + "kind", "tscl");
    const Formulation formulation =
        parse_formulation(kv.get(prefix + "formulation", "simple"));
    spec.formulation = formulation;
    if (kind == "tscl") {
        spec.kind = TeacherKind::Tscl;
        const std::string alg = kv.get(prefix + "algorithm", "online");
        if (alg == "online") {
            spec.config.algorithm = Algorithm::Online;
        } else if (alg == "naive") {
            spec.config.algorithm = Algorithm::Naive;
        } else if (alg == "window") {
            spec.config.algorithm = Algorithm::Window;
        } else if (alg == "sampling") {
            spec.config.algorithm = Algorithm::Sampling;
        } else {
            throw ConfigError("config: unknown teacher algorithm '" + alg + "'");
        }
        spec.config.formulation = formulation;
        const std::string policy = kv.get(prefix + "policy", "epsgreedy");
        if (policy == "epsgreedy") {
            spec.config.policy = PolicyKind::EpsGreedy;
        } else if (policy == "boltzmann") {
            spec.config.policy = PolicyKind::Boltzmann;
        } else {
            throw ConfigError("config: unknown teacher policy '" + policy + "'");
        }
        spec.config.alpha = kv.get_double(prefix + "alpha", spec.config.alpha);
        spec.config.epsilon = kv.get_double(prefix + "epsilon", spec.config.epsilon);
        spec.config.tau = kv.get_double(prefix + "tau", spec.config.tau);
        spec.config.window_k =
            static_cast<int>(kv.get_int(prefix + "window_k", spec.config.window_k));
        spec.config.use_abs = kv.get_bool(prefix + "use_abs", spec.config.use_abs);
    } else if (kind == "uniform") {
        spec.kind = TeacherKind::Uniform;
    } else if (kind == "manual") {
        spec.kind = TeacherKind::Manual;
        spec.schedule = parse_schedule(kv.require(prefix + "schedule"));
    } else if (kind == "final_task_only") {
        spec.kind = TeacherKind::FinalTaskOnly;
    } else {
        throw ConfigError("config: unknown teacher.kind '" + kind + "'");
    }
    return spec;
}

void parse_run_block(KeyValues& kv, ExperimentConfig& cfg) {
    cfg.max_steps = kv.get_int("run.max_steps", cfg.max_steps);
    cfg.mastery_threshold = kv.get_double("run.mastery_threshold", cfg.mastery_threshold);
    if (kv.has("run.seeds")) {
        cfg.seeds = parse_seed_list(kv.get("run.seeds", ""));
    }
}

}  // namespace

std::vector<uint64_t> parse_seed_list(const std::string& text) {
    const std::string v = trim(text);
    std::vector<uint64_t> seeds;
    const auto dots = v.find("..");
    if (dots != std::string::npos) {
        const int64_t a = KeyValues::to_int("seeds", trim(v.substr(0, dots)));
        const int64_t b = KeyValues::to_int("seeds", trim(v.substr(dots + 2)));
        if (a < 0 || b < a) {
            throw ConfigError("config: bad seed range '" + v + "'");
        }
        for (int64_t s = a; s <= b; ++s) seeds.push_back(static_cast<uint64_t>(s));
        return seeds;
    }
    for (const auto& item : split(v, ',')) {
        const int64_t s = KeyValues::to_int("seeds", item);
        if (s < 0) throw ConfigError("config: seeds must be nonnegative");
        seeds.push_back(static_cast<uint64_t>(s));
    }
    if (seeds.empty()) {
        throw ConfigError("config: empty seed list");
    }
    return seeds;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    KeyValues kv(text);
    if (kv.has("sweep.teachers")) {
        throw ConfigError("config: sweep config given where a single-teacher config is expected");
    }
    ExperimentConfig cfg;
    cfg.student = parse_student(kv);
    cfg.teacher = parse_teacher(kv, "teacher.", "teacher");
    parse_run_block(kv, cfg);
    kv.check_all_consumed();
    return cfg;
}

SweepSpec parse_sweep_config(const std::string& text) {
    KeyValues kv(text);
    SweepSpec sweep;
    sweep.base.student = parse_student(kv);
    parse_run_block(kv, sweep.base);
    if (kv.has("sweep.teachers")) {
        const auto names = split(kv.get("sweep.teachers", ""), ',');
        if (names.empty()) {
            throw ConfigError("config: sweep.teachers must list at least one name");
        }
        for (const auto& name : names) {
            if (name.empty()) {
                throw ConfigError("config: empty teacher name in sweep.teachers");
            }
            sweep.teachers.push_back(parse_teacher(kv, "teacher." + name + ".", name));
        }
    } else {
        sweep.teachers.push_back(parse_teacher(kv, "teacher.", "teacher"));
    }
    sweep.base.teacher = sweep.teachers.front();
    kv.check_all_consumed();
    return sweep;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config: cannot read '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
    return parse_experiment_config(read_file(path));
}

SweepSpec load_sweep_config(const std::string& path) {
    return parse_sweep_config(read_file(path));
}

}  // namespace tscl
