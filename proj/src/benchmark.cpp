#include "toponav/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace toponav {

std::string ablation_name(Ablation a) {
    switch (a) {
        case Ablation::Full: return "full";
        case Ablation::NoTopoMap: return "no_topo_map";
        case Ablation::NoHierarchy: return "no_hierarchy";
        case Ablation::NoIntrinsic: return "no_intrinsic";
    }
    return "full";
}

Ablation ablation_from_name(const std::string& name) {
    if (name == "full") return Ablation::Full;
    if (name == "no_topo_map") return Ablation::NoTopoMap;
    if (name == "no_hierarchy") return Ablation::NoHierarchy;
    if (name == "no_intrinsic") return Ablation::NoIntrinsic;
    throw ConfigError("unknown ablation '" + name +
                      "' (expected full, no_topo_map, no_hierarchy or no_intrinsic)");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(const std::string& raw, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": invalid integer '" +
                          raw + "' for key " + key);
    }
}

double to_double(const std::string& raw, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": invalid number '" +
                          raw + "' for key " + key);
    }
}

bool to_bool(const std::string& raw, const std::string& key, int line) {
    if (raw == "true") return true;
    if (raw == "false") return false;
    throw ConfigError("line " + std::to_string(line) + ": invalid boolean '" + raw +
                      "' for key " + key + " (expected true or false)");
}

std::vector<std::uint64_t> to_seeds(const std::string& raw, int line) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            seeds.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(line) + ": invalid seed '" +
                              item + "' for key seeds");
        }
    }
    if (seeds.empty()) {
        throw ConfigError("line " + std::to_string(line) + ": seeds must be nonempty");
    }
    return seeds;
}

void apply_key(BenchmarkConfig& c, const std::string& key, const std::string& raw,
               int line) {
    if (key == "scenario") c.scenario = to_int(raw, key, line);
    else if (key == "size") c.size = to_int(raw, key, line);
    else if (key == "seeds") c.seeds = to_seeds(raw, line);
    else if (key == "episodes") c.episodes = to_int(raw, key, line);
    else if (key == "train_episodes") c.train_episodes = to_int(raw, key, line);
    else if (key == "ablation") c.ablation = ablation_from_name(raw);
    else if (key == "snapshot") c.snapshot = raw;
    else if (key == "detection_range") c.detection_range = to_double(raw, key, line);
    else if (key == "slip_prob") c.slip_prob = to_double(raw, key, line);
    else if (key == "detection_false_negative")
        c.detection_false_negative = to_double(raw, key, line);
    else if (key == "tau_sim") c.tau_sim = to_double(raw, key, line);
    else if (key == "feature_dim") c.feature_dim = to_int(raw, key, line);
    else if (key == "lambda_decay") c.selection.lambda_decay = to_double(raw, key, line);
    else if (key == "w_n") c.selection.w_novelty = to_double(raw, key, line);
    else if (key == "w_gd") c.selection.w_goal = to_double(raw, key, line);
    else if (key == "alpha") c.reward.alpha = to_double(raw, key, line);
    else if (key == "beta") c.reward.beta = to_double(raw, key, line);
    else if (key == "gamma_pen") c.reward.gamma_pen = to_double(raw, key, line);
    else if (key == "r_goal") c.reward.r_goal = to_double(raw, key, line);
    else if (key == "r_milestone") c.reward.r_milestone = to_double(raw, key, line);
    else if (key == "r_obstacle") c.reward.r_obstacle = to_double(raw, key, line);
    else if (key == "r_sg_bonus") c.reward.r_sg_bonus = to_double(raw, key, line);
    else if (key == "lambda_fe") c.reward.lambda_fe = to_double(raw, key, line);
    else if (key == "lambda_ep") c.reward.lambda_ep = to_double(raw, key, line);
    else if (key == "lambda_ue") c.reward.lambda_ue = to_double(raw, key, line);
    else if (key == "lambda_p") c.reward.lambda_p = to_double(raw, key, line);
    else if (key == "lambda_sd") c.reward.lambda_sd = to_double(raw, key, line);
    else if (key == "lambda_te") c.reward.lambda_te = to_double(raw, key, line);
    else if (key == "epsilon_start") c.agent.epsilon_start = to_double(raw, key, line);
    else if (key == "epsilon_end") c.agent.epsilon_end = to_double(raw, key, line);
    else if (key == "epsilon_decay_steps")
        c.agent.epsilon_decay_steps = to_int(raw, key, line);
    else if (key == "d_thresh") c.agent.d_thresh = to_double(raw, key, line);
    else if (key == "max_steps_episode")
        c.agent.max_steps_episode = to_int(raw, key, line);
    else if (key == "max_steps_subgoal")
        c.agent.max_steps_subgoal = to_int(raw, key, line);
    else if (key == "batch_size") c.agent.batch_size = to_int(raw, key, line);
    else if (key == "discount") c.agent.discount = to_double(raw, key, line);
    else if (key == "learning_rate") c.agent.learning_rate = to_double(raw, key, line);
    else if (key == "buffer_capacity") c.agent.buffer_capacity = to_int(raw, key, line);
    else if (key == "meta_reward_extrinsic_only")
        c.agent.meta_reward_extrinsic_only = to_bool(raw, key, line);
    else
        throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

void validate_config(const BenchmarkConfig& c);

void validate_config(const BenchmarkConfig& c) {
    require(c.scenario >= 1 && c.scenario <= 3, "scenario must be 1, 2 or 3");
    require(c.size >= 10, "size must be >= 10");
    require(!c.seeds.empty(), "seeds must be nonempty");
    require(c.episodes >= 1, "episodes must be >= 1");
    require(c.train_episodes >= 0, "train_episodes must be >= 0");
    require(c.detection_range > 0.0, "detection_range must be > 0");
    require(c.slip_prob >= 0.0 && c.slip_prob < 1.0, "slip_prob must be in [0, 1)");
    require(c.detection_false_negative >= 0.0 && c.detection_false_negative < 1.0,
            "detection_false_negative must be in [0, 1)");
    require(c.tau_sim > 0.0 && c.tau_sim <= 1.0, "tau_sim must be in (0, 1]");
    require(c.feature_dim >= 1, "feature_dim must be >= 1");
    require(c.selection.lambda_decay > 0.0, "lambda_decay must be > 0");
    require(c.selection.w_novelty >= 0.0, "w_n must be >= 0");
    require(c.selection.w_goal >= 0.0, "w_gd must be >= 0");
    require(c.selection.w_novelty + c.selection.w_goal > 0.0, "w_n + w_gd must be > 0");
    require(c.reward.r_goal > 0.0, "r_goal must be > 0");
    require(c.reward.r_milestone > 0.0, "r_milestone must be > 0");
    require(c.reward.r_obstacle < 0.0, "r_obstacle must be < 0");
    require(c.reward.r_sg_bonus >= 0.0, "r_sg_bonus must be >= 0");
    require(c.reward.lambda_fe >= 0.0, "lambda_fe must be >= 0");
    require(c.reward.lambda_ep >= 0.0, "lambda_ep must be >= 0");
    require(c.reward.lambda_ue >= 0.0, "lambda_ue must be >= 0");
    require(c.reward.lambda_p >= 0.0, "lambda_p must be >= 0");
    require(c.reward.lambda_sd >= 0.0, "lambda_sd must be >= 0");
    require(c.reward.lambda_te >= 0.0, "lambda_te must be >= 0");
    require(c.agent.epsilon_start >= 0.0 && c.agent.epsilon_start <= 1.0,
            "epsilon_start must be in [0, 1]");
    require(c.agent.epsilon_end >= 0.0 && c.agent.epsilon_end <= c.agent.epsilon_start,
            "epsilon_end must be in [0, epsilon_start]");
    require(c.agent.epsilon_decay_steps >= 1, "epsilon_decay_steps must be >= 1");
    require(c.agent.d_thresh > 0.0, "d_thresh must be > 0");
    require(c.agent.max_steps_episode >= 1, "max_steps_episode must be >= 1");
    require(c.agent.max_steps_subgoal >= 1, "max_steps_subgoal must be >= 1");
    require(c.agent.batch_size >= 1, "batch_size must be >= 1");
    require(c.agent.discount >= 0.0 && c.agent.discount < 1.0,
            "discount must be in [0, 1)");
    require(c.agent.learning_rate > 0.0 && c.agent.learning_rate <= 1.0,
            "learning_rate must be in (0, 1]");
    require(c.agent.buffer_capacity >= 1, "buffer_capacity must be >= 1");
}

BenchmarkConfig parse_config(const std::string& text) {
    BenchmarkConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        apply_key(cfg, key, value, line_no);
    }
    validate_config(cfg);
    return cfg;
}

BenchmarkConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

std::string fmt(double v) { return nlohmann::json(v).dump(); }
std::string fmt(int v) { return std::to_string(v); }
std::string fmt(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string format_config(const BenchmarkConfig& c) {
    std::ostringstream out;
    out << "scenario = " << fmt(c.scenario) << "\n";
    out << "size = " << fmt(c.size) << "\n";
    out << "seeds = ";
    for (std::size_t i = 0; i < c.seeds.size(); ++i) {
        if (i) out << ",";
        out << c.seeds[i];
    }
    out << "\n";
    out << "episodes = " << fmt(c.episodes) << "\n";
    out << "train_episodes = " << fmt(c.train_episodes) << "\n";
    out << "ablation = " << ablation_name(c.ablation) << "\n";
    if (!c.snapshot.empty()) out << "snapshot = " << c.snapshot << "\n";
    out << "detection_range = " << fmt(c.detection_range) << "\n";
    out << "slip_prob = " << fmt(c.slip_prob) << "\n";
    out << "detection_false_negative = " << fmt(c.detection_false_negative) << "\n";
    out << "tau_sim = " << fmt(c.tau_sim) << "\n";
    out << "feature_dim = " << fmt(c.feature_dim) << "\n";
    out << "lambda_decay = " << fmt(c.selection.lambda_decay) << "\n";
    out << "w_n = " << fmt(c.selection.w_novelty) << "\n";
    out << "w_gd = " << fmt(c.selection.w_goal) << "\n";
    out << "alpha = " << fmt(c.reward.alpha) << "\n";
    out << "beta = " << fmt(c.reward.beta) << "\n";
    out << "gamma_pen = " << fmt(c.reward.gamma_pen) << "\n";
    out << "r_goal = " << fmt(c.reward.r_goal) << "\n";
    out << "r_milestone = " << fmt(c.reward.r_milestone) << "\n";
    out << "r_obstacle = " << fmt(c.reward.r_obstacle) << "\n";
    out << "r_sg_bonus = " << fmt(c.reward.r_sg_bonus) << "\n";
    out << "lambda_fe = " << fmt(c.reward.lambda_fe) << "\n";
    out << "lambda_ep = " << fmt(c.reward.lambda_ep) << "\n";
    out << "lambda_ue = " << fmt(c.reward.lambda_ue) << "\n";
    out << "lambda_p = " << fmt(c.reward.lambda_p) << "\n";
    out << "lambda_sd = " << fmt(c.reward.lambda_sd) << "\n";
    out << "lambda_te = " << fmt(c.reward.lambda_te) << "\n";
    out << "epsilon_start = " << fmt(c.agent.epsilon_start) << "\n";
    out << "epsilon_end = " << fmt(c.agent.epsilon_end) << "\n";
    out << "epsilon_decay_steps = " << fmt(c.agent.epsilon_decay_steps) << "\n";
    out << "d_thresh = " << fmt(c.agent.d_thresh) << "\n";
    out << "max_steps_episode = " << fmt(c.agent.max_steps_episode) << "\n";
    out << "max_steps_subgoal = " << fmt(c.agent.max_steps_subgoal) << "\n";
    out << "batch_size = " << fmt(c.agent.batch_size) << "\n";
    out << "discount = " << fmt(c.agent.discount) << "\n";
    out << "learning_rate = " << fmt(c.agent.learning_rate) << "\n";
    out << "buffer_capacity = " << fmt(c.agent.buffer_capacity) << "\n";
    out << "meta_reward_extrinsic_only = " << fmt(c.agent.meta_reward_extrinsic_only)
        << "\n";
    return out.str();
}

namespace {

struct SeedOutcome {
    std::vector<EpisodeResult> evals;
    bool meta_constructed = false;
};

AgentMode mode_for(Ablation a) {
    switch (a) {
        case Ablation::NoTopoMap: return AgentMode::NoTopoMap;
        case Ablation::NoHierarchy: return AgentMode::Flat;
        default: return AgentMode::Full;
    }
}

SeedOutcome run_seed(const BenchmarkConfig& cfg, std::uint64_t seed) {
    const GridWorld world =
        GridWorld::make_scenario(cfg.scenario, cfg.size, seed, cfg.detection_range,
                                 cfg.slip_prob, cfg.feature_dim);
    RewardConfig reward = cfg.reward;
    if (cfg.ablation == Ablation::NoIntrinsic) reward.beta = 0.0;

    NavigationAgent agent(mode_for(cfg.ablation), cfg.agent, reward, cfg.selection);
    if (!cfg.snapshot.empty()) {
        std::ifstream in(cfg.snapshot);
        if (!in) throw std::runtime_error("cannot open snapshot: " + cfg.snapshot);
        nlohmann::json doc;
        in >> doc;
        agent.load_snapshot(doc);
    }

    MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    Rng train_rng = Rng::derive(seed, "train");
    Rng eval_rng = Rng::derive(seed, "eval");

    const EpisodeOptions train_opt{
        .learn = true, .detection_false_negative = cfg.detection_false_negative};
    for (int e = 0; e < cfg.train_episodes; ++e) {
        agent.run_episode(world, mapping, train_rng, train_opt);
    }

    SeedOutcome outcome;
    outcome.meta_constructed = agent.meta_constructed();
    const EpisodeOptions eval_opt{
        .learn = false, .detection_false_negative = cfg.detection_false_negative};
    for (int e = 0; e < cfg.episodes; ++e) {
        MappingState eval_mapping = mapping;  // greedy runs never mutate learned state
        outcome.evals.push_back(agent.run_episode(world, eval_mapping, eval_rng, eval_opt));
    }
    return outcome;
}

MetricSummary summarize(const std::vector<double>& per_seed) {
    MetricSummary s;
    if (per_seed.empty()) return s;
    double sum = 0.0;
    for (double v : per_seed) sum += v;
    s.mean = sum / static_cast<double>(per_seed.size());
    if (per_seed.size() > 1) {
        double sq = 0.0;
        for (double v : per_seed) sq += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(per_seed.size() - 1));
    }
    return s;
}

}  // namespace

BenchmarkReport run_benchmark(const BenchmarkConfig& cfg) {
    validate_config(cfg);

    std::vector<std::future<SeedOutcome>> futures;
    futures.reserve(cfg.seeds.size());
    for (std::uint64_t seed : cfg.seeds) {
        futures.push_back(std::async(std::launch::async,
                                     [&cfg, seed] { return run_seed(cfg, seed); }));
    }

    BenchmarkReport report;
    report.ablation = cfg.ablation;
    report.max_steps_episode = cfg.agent.max_steps_episode;

    std::vector<double> seed_success, seed_steps, seed_traj, seed_cov;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        const SeedOutcome outcome = futures[i].get();
        report.meta_constructed = report.meta_constructed || outcome.meta_constructed;

        double successes = 0.0, cov = 0.0;
        double steps_sum = 0.0, traj_sum = 0.0;
        int success_count = 0;
        for (std::size_t e = 0; e < outcome.evals.size(); ++e) {
            const EpisodeResult& r = outcome.evals[e];
            report.episodes.push_back(
                {cfg.seeds[i], static_cast<int>(e), r});
            successes += r.success ? 1.0 : 0.0;
            cov += r.coverage;
            if (r.success) {
                ++success_count;
                steps_sum += r.steps;
                traj_sum += r.trajectory_length;
            }
            report.reward_totals.r_ex += r.totals.r_ex;
            report.reward_totals.r_in += r.totals.r_in;
            report.reward_totals.r_sg += r.totals.r_sg;
            report.reward_totals.r_fe += r.totals.r_fe;
            report.reward_totals.r_ep += r.totals.r_ep;
            report.reward_totals.r_ue += r.totals.r_ue;
            report.reward_totals.r_p += r.totals.r_p;
            report.reward_totals.r_sd += r.totals.r_sd;
            report.reward_totals.r_te += r.totals.r_te;
            report.reward_totals.r_ob += r.totals.r_ob;
            report.reward_totals.total += r.totals.total;
        }
        const double n = static_cast<double>(outcome.evals.size());
        seed_success.push_back(successes / n);
        seed_cov.push_back(cov / n);
        // Navigation time / trajectory length follow the paper's definition
        // (successful episodes only); a seed with no successes contributes the
        // episode cap.
        seed_steps.push_back(success_count > 0
                                 ? steps_sum / success_count
                                 : static_cast<double>(cfg.agent.max_steps_episode));
        seed_traj.push_back(success_count > 0
                                ? traj_sum / success_count
                                : static_cast<double>(cfg.agent.max_steps_episode));
    }

    report.success_rate = summarize(seed_success);
    report.navigation_steps = summarize(seed_steps);
    report.trajectory_length = summarize(seed_traj);
    report.coverage = summarize(seed_cov);
    return report;
}

void export_results(const BenchmarkReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write results file: " + path);
    for (const EpisodeRecord& rec : report.episodes) {
        const nlohmann::json j = {
            {"type", "episode"},
            {"seed", rec.seed},
            {"episode", rec.episode},
            {"success", rec.result.success},
            {"steps", rec.result.steps},
            {"trajectory_length", rec.result.trajectory_length},
            {"coverage", rec.result.coverage},
            {"map_nodes", rec.result.map_nodes},
            {"map_edges", rec.result.map_edges},
            {"reward", breakdown_to_json(rec.result.totals)},
        };
        out << j.dump() << "\n";
    }
    const nlohmann::json summary = {
        {"type", "summary"},
        {"ablation", ablation_name(report.ablation)},
        {"episodes", report.episodes.size()},
        {"success_rate", {{"mean", report.success_rate.mean}, {"stddev", report.success_rate.stddev}}},
        {"navigation_steps",
         {{"mean", report.navigation_steps.mean}, {"stddev", report.navigation_steps.stddev}}},
        {"trajectory_length",
         {{"mean", report.trajectory_length.mean}, {"stddev", report.trajectory_length.stddev}}},
        {"coverage", {{"mean", report.coverage.mean}, {"stddev", report.coverage.stddev}}},
        {"reward_totals", breakdown_to_json(report.reward_totals)},
        {"meta_constructed", report.meta_constructed},
    };
    out << summary.dump() << "\n";
    if (!out) throw std::runtime_error("failed writing results file: " + path);
}

ImportedResults import_results(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open results file: " + path);
    ImportedResults res;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        if (j.at("type") == "summary") {
            res.summary = std::move(j);
        } else {
            res.episode_records.push_back(std::move(j));
        }
    }
    if (res.summary.is_null()) {
        throw std::runtime_error("results file has no summary record: " + path);
    }
    return res;
}

void export_map(const TopoMap& map, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write map file: " + path);
    out << map.to_json().dump(2) << "\n";
    if (!out) throw std::runtime_error("failed writing map file: " + path);
}

TopoMap import_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    nlohmann::json doc;
    in >> doc;
    return TopoMap::from_json(doc);
}

EdgePolicy train_edge_policy(const GridWorld& world, Cell from, Cell to,
                             const AgentConfig& cfg, int episodes, Rng& rng) {
    EdgePolicy policy{from, to,
                      QFunction(cfg.learning_rate, cfg.discount, {0, 1, 2, 3})};
    ReplayBuffer buffer(static_cast<std::size_t>(cfg.buffer_capacity));
    // Exploration decays over the episode budget itself so short trainings
    // still see enough random successes to bootstrap from.
    const double decay_horizon = std::max(1.0, 0.7 * static_cast<double>(episodes));
    for (int e = 0; e < episodes; ++e) {
        const double frac = std::min(1.0, static_cast<double>(e) / decay_horizon);
        const double epsilon =
            cfg.epsilon_start + frac * (cfg.epsilon_end - cfg.epsilon_start);
        Cell s = from;
        for (int t = 0; t < 3 * cfg.max_steps_subgoal && s != to; ++t) {
            const Action a = select_action(policy.q, s, epsilon, rng);
            const StepOutcome out = world.step(s, a, rng);
            const bool terminal = out.next_state == to;
            buffer.push(Transition{.s = s,
                                   .choice = static_cast<int>(a),
                                   .reward = terminal ? 1.0 : 0.0,
                                   .s_next = out.next_state,
                                   .terminal = terminal});
            if (buffer.size() >= static_cast<std::size_t>(cfg.batch_size)) {
                policy.q.update_batch(
                    buffer.sample(static_cast<std::size_t>(cfg.batch_size), rng));
            }
            s = out.next_state;
        }
    }
    return policy;
}

double estimate_edge_success(const GridWorld& world, const TopoMap& map,
                             const EdgePolicy& policy, std::pair<int, int> edge,
                             int trials, int max_steps, Rng& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const TopoNode& na = map.node(edge.first);   // throws on unknown ids
    const TopoNode& nb = map.node(edge.second);
    const Cell from{static_cast<int>(std::lround(na.position.x)),
                    static_cast<int>(std::lround(na.position.y))};
    const Cell to{static_cast<int>(std::lround(nb.position.x)),
                  static_cast<int>(std::lround(nb.position.y))};
    int successes = 0;
    for (int i = 0; i < trials; ++i) {
        Cell s = from;
        for (int t = 0; t < max_steps && s != to; ++t) {
            const Action a = select_action(policy.q, s, 0.0, rng);
            s = world.step(s, a, rng).next_state;
        }
        if (s == to) ++successes;
    }
    return static_cast<double>(successes) / static_cast<double>(trials);
}

ReachabilityReport check_reachability_bound(const std::vector<double>& edge_estimates,
                                            const std::vector<int>& edge_trials,
                                            double empirical_success,
                                            int path_trials) {
    ReachabilityReport r;
    r.edge_estimates = edge_estimates;
    r.edge_trials = edge_trials;
    r.path_trials = path_trials;
    double product = 1.0;
    double max_eps = 0.0;
    for (double est : edge_estimates) {
        product *= est;
        max_eps = std::max(max_eps, 1.0 - est);
    }
    r.product = product;
    r.bound = 1.0 - static_cast<double>(edge_estimates.size()) * max_eps;
    r.empirical = empirical_success;
    r.bound_satisfied = product >= r.bound - 1e-12;
    r.empirical_within = std::abs(empirical_success - product) <= 0.05;
    return r;
}

ReachabilitySetup make_reachability_setup(int num_nodes, int spacing,
                                          double slip_prob, int feature_dim) {
    if (num_nodes < 2) throw std::invalid_argument("need at least two path nodes");
    const int width = 4 + spacing * (num_nodes - 1) + 1;
    const int height = 7;
    const int row = height / 2;
    const Cell start{2, row};
    const Cell goal{2 + spacing * (num_nodes - 1), row};
    GridWorld world(width, height, {}, {}, start, goal, 5.0, slip_prob);

    TopoMap map(0.5, feature_dim);
    int prev = -1;
    for (int i = 0; i < num_nodes; ++i) {
        Descriptor feat(static_cast<std::size_t>(feature_dim), 0.0);
        feat[0] = 10.0 * static_cast<double>(i);  // pairwise far apart
        const Cell c{2 + spacing * i, row};
        const MatchResult m = map.match_or_insert(feat, c.center());
        if (prev >= 0) map.add_edge(prev, m.node_id);
        prev = m.node_id;
    }
    ReachabilitySetup setup{std::move(world), std::move(map), {}};
    setup.path.resize(static_cast<std::size_t>(num_nodes));
    for (int i = 0; i < num_nodes; ++i) setup.path[static_cast<std::size_t>(i)] = i;
    return setup;
}

ReachabilityReport verify_reachability(const ReachabilitySetup& setup,
                                       const std::vector<int>& path_nodes,
                                       int trials, const AgentConfig& agent_cfg,
                                       int train_episodes, std::uint64_t seed) {
    if (path_nodes.size() < 2) throw std::invalid_argument("path needs >= 2 nodes");
    Rng rng = Rng::derive(seed, "reachability");

    std::vector<EdgePolicy> policies;
    std::vector<double> estimates;
    std::vector<int> edge_trials;
    std::vector<Cell> cells;
    for (int nid : path_nodes) {
        const TopoNode& n = setup.map.node(nid);
        cells.push_back({static_cast<int>(std::lround(n.position.x)),
                         static_cast<int>(std::lround(n.position.y))});
    }
    for (std::size_t i = 0; i + 1 < path_nodes.size(); ++i) {
        policies.push_back(train_edge_policy(setup.world, cells[i], cells[i + 1],
                                             agent_cfg, train_episodes, rng));
        estimates.push_back(estimate_edge_success(
            setup.world, setup.map, policies.back(),
            {path_nodes[i], path_nodes[i + 1]}, trials,
            agent_cfg.max_steps_subgoal, rng));
        edge_trials.push_back(trials);
    }

    int path_successes = 0;
    for (int trial = 0; trial < trials; ++trial) {
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < path_nodes.size(); ++i) {
            Cell s = cells[i];
            for (int t = 0; t < agent_cfg.max_steps_subgoal && s != cells[i + 1]; ++t) {
                const Action a = select_action(policies[i].q, s, 0.0, rng);
                s = setup.world.step(s, a, rng).next_state;
            }
            ok = (s == cells[i + 1]);
        }
        if (ok) ++path_successes;
    }
    const double empirical =
        static_cast<double>(path_successes) / static_cast<double>(trials);
    return check_reachability_bound(estimates, edge_trials, empirical, trials);
}

nlohmann::json reachability_to_json(const ReachabilityReport& r) {
    return {{"edge_estimates", r.edge_estimates},
            {"edge_trials", r.edge_trials},
            {"product", r.product},
            {"bound", r.bound},
            {"empirical", r.empirical},
            {"path_trials", r.path_trials},
            {"bound_satisfied", r.bound_satisfied},
            {"empirical_within", r.empirical_within}};
}

}  // namespace toponav
