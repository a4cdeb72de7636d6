#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "toponav/agent.hpp"
#include "toponav/grid_world.hpp"

#include <nlohmann/json.hpp>

namespace toponav {

// Config-file or flag problems; the CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Ablation { Full, NoTopoMap, NoHierarchy, NoIntrinsic };

std::string ablation_name(Ablation a);
Ablation ablation_from_name(const std::string& name);

struct BenchmarkConfig {
    int scenario = 3;
    int size = 20;
    std::vector<std::uint64_t> seeds = {1};
    int episodes = 100;        // greedy evaluation episodes per seed
    int train_episodes = 200;  // training episodes per seed
    Ablation ablation = Ablation::Full;
    std::string snapshot;  // optional pre-trained policy to load

    double detection_range = 5.0;
    double slip_prob = 0.1;
    double detection_false_negative = 0.0;  // diagnostic only, off by default

    double tau_sim = 0.5;
    int feature_dim = 8;

    SelectionConfig selection;
    RewardConfig reward;
    AgentConfig agent;
};

// Parses a flat `key = value` document ('#' comments, blank lines allowed).
// Unknown keys and out-of-range values are rejected by name; parse errors
// carry the line number. Missing keys keep their defaults.
BenchmarkConfig parse_config(const std::string& text);
BenchmarkConfig load_config_file(const std::string& path);

// Inverse of parse_config: every key, one per line, current values.
std::string format_config(const BenchmarkConfig& cfg);

struct EpisodeRecord {
    std::uint64_t seed = 0;
    int episode = 0;
    EpisodeResult result;
};

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation across seeds
};

struct BenchmarkReport {
    Ablation ablation = Ablation::Full;
    std::vector<EpisodeRecord> episodes;
    // Across-seed aggregates of per-seed means.
    MetricSummary success_rate;
    MetricSummary navigation_steps;    // successful episodes; episode cap if none
    MetricSummary trajectory_length;   // successful episodes; episode cap if none
    MetricSummary coverage;
    RewardBreakdown reward_totals;     // summed over every evaluation episode
    bool meta_constructed = false;
    int max_steps_episode = 0;
};

// Trains and greedily evaluates one agent per seed (in parallel), then
// aggregates. Deterministic for a fixed config.
BenchmarkReport run_benchmark(const BenchmarkConfig& cfg);

// One JSON record per evaluation episode plus a trailing summary record.
void export_results(const BenchmarkReport& report, const std::string& path);
struct ImportedResults {
    std::vector<nlohmann::json> episode_records;
    nlohmann::json summary;
};
ImportedResults import_results(const std::string& path);

void export_map(const TopoMap& map, const std::string& path);
TopoMap import_map(const std::string& path);

// --- Theorem 1 empirical machinery -----------------------------------------

// Sub-controller trained to drive one edge (from -> to) of a map.
struct EdgePolicy {
    Cell from;
    Cell to;
    QFunction q;
};

// Q-learning on the single task "reach `to` from `from`" using the shared
// update rule; greedy behavior converges on desk-scale worlds.
EdgePolicy train_edge_policy(const GridWorld& world, Cell from, Cell to,
                             const AgentConfig& cfg, int episodes, Rng& rng);

// Monte Carlo success estimate for driving a -> b within max_steps_subgoal.
double estimate_edge_success(const GridWorld& world, const TopoMap& map,
                             const EdgePolicy& policy, std::pair<int, int> edge,
                             int trials, int max_steps, Rng& rng);

struct ReachabilityReport {
    std::vector<double> edge_estimates;  // 1 - eps_pq per path edge
    std::vector<int> edge_trials;
    double product = 0.0;         // prod(1 - eps_pq)
    double bound = 0.0;           // 1 - k * max eps_pq
    double empirical = 0.0;       // full-path Monte Carlo success
    int path_trials = 0;
    bool bound_satisfied = false;      // product >= bound
    bool empirical_within = false;     // |empirical - product| <= 0.05
};

// Theorem 1 arithmetic over measured edge estimates plus the empirical
// full-path success.
ReachabilityReport check_reachability_bound(const std::vector<double>& edge_estimates,
                                            const std::vector<int>& edge_trials,
                                            double empirical_success,
                                            int path_trials);

// Full pipeline on a corridor world: place path nodes, train one policy per
// edge, estimate each edge, run full-path trials, and check the bound.
struct ReachabilitySetup {
    GridWorld world;
    TopoMap map;
    std::vector<int> path;  // node ids
};
ReachabilitySetup make_reachability_setup(int num_nodes, int spacing,
                                          double slip_prob, int feature_dim);
ReachabilityReport verify_reachability(const ReachabilitySetup& setup,
                                       const std::vector<int>& path_nodes,
                                       int trials, const AgentConfig& agent_cfg,
                                       int train_episodes, std::uint64_t seed);

nlohmann::json reachability_to_json(const ReachabilityReport& r);

}  // namespace toponav
