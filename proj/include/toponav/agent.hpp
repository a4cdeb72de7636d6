#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "toponav/grid_world.hpp"
#include "toponav/landmark_select.hpp"
#include "toponav/q_learning.hpp"
#include "toponav/reward.hpp"
#include "toponav/topo_map.hpp"

#include <nlohmann/json_fwd.hpp>

namespace toponav {

struct AgentConfig {
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    int epsilon_decay_steps = 60000;
    double d_thresh = 5.0;  // cells; virtual-subgoal synthesis distance
    int max_steps_episode = 400;
    int max_steps_subgoal = 25;
    int batch_size = 32;
    double discount = 0.9;
    double learning_rate = 0.1;
    int buffer_capacity = 10000;
    // Open toggle: meta-level updates can use only the extrinsic share of the
    // composite reward instead of the full composite.
    bool meta_reward_extrinsic_only = false;
};

// Epsilon-greedy subgoal choice over the map's nodes; throws on an empty map
// (callers fall back to the global goal).
int select_subgoal(const QFunction& q_meta, Cell s, const TopoMap& map,
                   double epsilon, Rng& rng);

// Epsilon-greedy primitive action; ties resolve in order N < E < S < W.
Action select_action(const QFunction& q_sub, Cell s, double epsilon, Rng& rng);

// Addresses one sub-controller: one Q-table per map node (absolute cell
// states), plus a single shared "pursuit" controller for virtual/global
// targets whose state is the sign of the target offset. Synthesized subgoals
// are unbounded, the sign space is not.
struct SubControllerKey {
    bool is_node = false;
    int key = 0;  // node id; 0 for the shared pursuit controller

    auto operator<=>(const SubControllerKey&) const = default;
};

inline constexpr SubControllerKey kPursuitKey{.is_node = false, .key = 0};

// Offset-sign state of the pursuit controller: each component in {-1, 0, 1}.
Cell pursuit_state(Cell s, Cell target);

std::string sub_key_name(const SubControllerKey& k);
std::optional<SubControllerKey> sub_key_from_name(const std::string& name);

// Map plus the landmark-id -> node-id registry that keeps landmark visit
// counts synchronized with node visits. Owned by the training driver; copied
// for evaluation episodes so greedy runs never mutate learned state.
struct MappingState {
    TopoMap map;
    std::unordered_map<int, int> landmark_to_node;

    explicit MappingState(double tau_sim = 0.5, int feature_dim = 8)
        : map(tau_sim, feature_dim) {}
};

struct EpisodeResult {
    bool success = false;
    int steps = 0;
    int trajectory_length = 0;  // cells actually traversed (<= steps)
    double coverage = 0.0;      // explored free-cell fraction
    RewardBreakdown totals;     // per-term weighted sums over the episode
    int map_nodes = 0;
    int map_edges = 0;
};

// One retargeting event, for tests and debugging.
struct SubgoalEvent {
    int t = 0;
    char kind = 'G';  // 'N' node, 'V' virtual waypoint, 'G' global goal
    Cell target{};
    int node_id = -1;
};

struct EpisodeOptions {
    bool learn = true;
    double detection_false_negative = 0.0;  // diagnostic toggle, off by default
    std::vector<SubgoalEvent>* trace = nullptr;
};

enum class AgentMode {
    Full,        // hierarchy + topological map
    NoTopoMap,   // subgoal pinned to the global goal; map still logged
    Flat,        // single Q-learner on primitive actions, no meta-controller
};

// Two-level Q-learning navigator: a meta Q-function over (state, node) picks
// subgoals, per-subgoal Q-functions over (state, action) pursue them. The
// Flat mode shares the mapping and reward machinery but learns one table.
class NavigationAgent {
  public:
    NavigationAgent(AgentMode mode, const AgentConfig& cfg,
                    const RewardConfig& reward_cfg,
                    const SelectionConfig& selection_cfg);

    EpisodeResult run_episode(const GridWorld& world, MappingState& mapping,
                              Rng& rng, const EpisodeOptions& opt = {});

    AgentMode mode() const { return mode_; }
    bool meta_constructed() const { return meta_.has_value(); }
    const QFunction& meta() const;
    const QFunction* sub(const SubControllerKey& k) const;
    const QFunction* flat() const { return flat_ ? &*flat_ : nullptr; }
    long long global_step() const { return global_step_; }
    double epsilon() const;

    // Largest |Q| across every table; bounded by max |r| / (1 - discount).
    double max_abs_q() const;
    double max_abs_reward() const { return max_abs_reward_; }

    // Trained-policy snapshot; loading reproduces greedy behavior exactly.
    nlohmann::json snapshot() const;
    void load_snapshot(const nlohmann::json& doc);

    const AgentConfig& config() const { return cfg_; }
    const RewardConfig& reward_config() const { return reward_cfg_; }

  private:
    AgentMode mode_;
    AgentConfig cfg_;
    RewardConfig reward_cfg_;
    SelectionConfig selection_cfg_;

    std::optional<QFunction> meta_;  // engaged only in Full mode
    std::unique_ptr<ReplayBuffer> meta_buffer_;
    std::map<SubControllerKey, QFunction> subs_;
    std::map<SubControllerKey, ReplayBuffer> sub_buffers_;
    std::optional<QFunction> flat_;
    std::unique_ptr<ReplayBuffer> flat_buffer_;

    long long global_step_ = 0;
    double max_abs_reward_ = 0.0;

    QFunction& sub_for(const SubControllerKey& k);
    ReplayBuffer& sub_buffer_for(const SubControllerKey& k);

    EpisodeResult run_hierarchical(const GridWorld& world, MappingState& mapping,
                                   Rng& rng, const EpisodeOptions& opt);
    EpisodeResult run_flat(const GridWorld& world, MappingState& mapping,
                           Rng& rng, const EpisodeOptions& opt);
};

}  // namespace toponav
