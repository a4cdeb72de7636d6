// toponav command-line harness: train/evaluate benchmark scenarios, verify
// the subgoal-reachability bound, and export maps and effective configs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toponav/benchmark.hpp"

namespace {

using toponav::BenchmarkConfig;

struct CommonFlags {
    std::string config_path;
    std::optional<int> scenario;
    std::optional<int> size;
    std::optional<std::string> seeds;
    std::optional<int> episodes;
    std::optional<std::string> ablation;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Config file (key = value lines)");
    cmd->add_option("--scenario", flags.scenario, "Scenario kind: 1, 2 or 3")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--size", flags.size, "World size in cells");
    cmd->add_option("--seeds", flags.seeds, "Comma-separated seed list");
    cmd->add_option("--episodes", flags.episodes, "Evaluation episodes per seed");
    cmd->add_option("--ablation", flags.ablation,
                    "full, no_topo_map, no_hierarchy or no_intrinsic");
}

std::vector<std::uint64_t> parse_seed_csv(const std::string& csv) {
    // Reuse the config parser so error wording matches.
    return toponav::parse_config("seeds = " + csv).seeds;
}

BenchmarkConfig effective_config(const CommonFlags& flags) {
    BenchmarkConfig cfg;
    if (!flags.config_path.empty()) cfg = toponav::load_config_file(flags.config_path);
    if (flags.scenario) cfg.scenario = *flags.scenario;
    if (flags.size) cfg.size = *flags.size;
    if (flags.seeds) cfg.seeds = parse_seed_csv(*flags.seeds);
    if (flags.episodes) cfg.episodes = *flags.episodes;
    if (flags.ablation) cfg.ablation = toponav::ablation_from_name(*flags.ablation);
    if (const char* env_seed = std::getenv("TOPONAV_SEED")) {
        cfg.seeds = parse_seed_csv(env_seed);
    }
    // Revalidate after overrides.
    return toponav::parse_config(toponav::format_config(cfg));
}

int cmd_run(const CommonFlags& flags, const std::string& out_dir) {
    const BenchmarkConfig cfg = effective_config(flags);
    const toponav::BenchmarkReport report = toponav::run_benchmark(cfg);

    std::filesystem::create_directories(out_dir);
    const std::string results_path =
        (std::filesystem::path(out_dir) / "episodes.jsonl").string();
    toponav::export_results(report, results_path);

    std::cout << "ablation: " << toponav::ablation_name(report.ablation) << "\n"
              << "episodes: " << report.episodes.size() << "\n"
              << "success_rate: " << report.success_rate.mean << " (sd "
              << report.success_rate.stddev << ")\n"
              << "navigation_steps: " << report.navigation_steps.mean << " (sd "
              << report.navigation_steps.stddev << ")\n"
              << "trajectory_length: " << report.trajectory_length.mean << " (sd "
              << report.trajectory_length.stddev << ")\n"
              << "coverage: " << report.coverage.mean << " (sd "
              << report.coverage.stddev << ")\n"
              << "results: " << results_path << "\n";
    return 0;
}

int cmd_verify_reachability(const CommonFlags& flags, const std::string& path_nodes,
                            int trials) {
    BenchmarkConfig cfg = effective_config(flags);
    std::vector<int> path;
    for (std::uint64_t v : parse_seed_csv(path_nodes)) path.push_back(static_cast<int>(v));

    const int num_nodes = *std::max_element(path.begin(), path.end()) + 1;
    const auto setup = toponav::make_reachability_setup(num_nodes, /*spacing=*/6,
                                                        cfg.slip_prob, cfg.feature_dim);
    const auto report = toponav::verify_reachability(setup, path, trials, cfg.agent,
                                                     /*train_episodes=*/3000,
                                                     cfg.seeds.front());
    std::cout << toponav::reachability_to_json(report).dump(2) << "\n";
    return (report.bound_satisfied && report.empirical_within) ? 0 : 2;
}

int cmd_export_map(const CommonFlags& flags, const std::string& out_file, int steps) {
    const BenchmarkConfig cfg = effective_config(flags);
    const auto world = toponav::GridWorld::make_scenario(
        cfg.scenario, cfg.size, cfg.seeds.front(), cfg.detection_range, cfg.slip_prob,
        cfg.feature_dim);
    toponav::NavigationAgent agent(toponav::AgentMode::Full, cfg.agent, cfg.reward,
                                   cfg.selection);
    toponav::MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    toponav::Rng rng = toponav::Rng::derive(cfg.seeds.front(), "train");
    while (agent.global_step() < steps) {
        agent.run_episode(world, mapping, rng,
                          {.learn = true,
                           .detection_false_negative = cfg.detection_false_negative});
    }
    toponav::export_map(mapping.map, out_file);
    std::cout << "map: " << out_file << " (" << mapping.map.node_count() << " nodes, "
              << mapping.map.edge_count() << " edges)\n";
    return 0;
}

int cmd_print_config(const CommonFlags& flags) {
    std::cout << toponav::format_config(effective_config(flags));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TopoNav benchmark harness"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string out_dir = "out";
    CLI::App* run = app.add_subcommand("run", "Train and evaluate a benchmark");
    add_common_flags(run, run_flags);
    run->add_option("--out", out_dir, "Output directory for result files");

    CommonFlags reach_flags;
    std::string path_nodes = "0,1,2,3";
    int trials = 2000;
    CLI::App* reach = app.add_subcommand(
        "verify-reachability", "Empirically check the subgoal-reachability bound");
    add_common_flags(reach, reach_flags);
    reach->add_option("--path-nodes", path_nodes, "Comma-separated path node ids");
    reach->add_option("--trials", trials, "Monte Carlo trials per edge and path")
        ->check(CLI::PositiveNumber);

    CommonFlags map_flags;
    std::string map_out = "map.json";
    int map_steps = 500;
    CLI::App* exp = app.add_subcommand("export-map",
                                       "Run a seeded mapping pass and export the map");
    add_common_flags(exp, map_flags);
    exp->add_option("--out", map_out, "Output map file");
    exp->add_option("--steps", map_steps, "Minimum training steps before export")
        ->check(CLI::PositiveNumber);

    CommonFlags print_flags;
    CLI::App* print = app.add_subcommand("print-config",
                                         "Print the effective config after defaults");
    add_common_flags(print, print_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(run_flags, out_dir);
        if (reach->parsed()) return cmd_verify_reachability(reach_flags, path_nodes, trials);
        if (exp->parsed()) return cmd_export_map(map_flags, map_out, map_steps);
        if (print->parsed()) return cmd_print_config(print_flags);
    } catch (const toponav::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
