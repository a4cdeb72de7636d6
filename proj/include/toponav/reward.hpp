#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "toponav/descriptor.hpp"
#include "toponav/geometry.hpp"

#include <nlohmann/json_fwd.hpp>

namespace toponav {

// Mixing weights and scaling factors of the composite reward
//   r = alpha * r_ex + beta * (r_in + r_sg + r_fe + r_ep + r_ue)
//     + gamma_pen * (r_p + r_sd + r_te + r_ob)
struct RewardConfig {
    double alpha = 1.0;
    double beta = 0.3;
    double gamma_pen = 0.3;
    double r_goal = 100.0;      // > 0
    double r_milestone = 10.0;  // > 0
    double r_obstacle = -1.0;   // < 0
    double lambda_fe = 1.0;
    double lambda_ep = 1.0;
    double lambda_ue = 1.0;
    double lambda_p = 0.1;
    double lambda_sd = 0.5;
    double lambda_te = 0.01;
    double r_sg_bonus = 1.0;
};

// Mutable per-episode exploration counters.
struct ExplorationState {
    std::unordered_map<Cell, int, CellHash> state_visits;  // N(s), counted on arrival
    std::vector<Descriptor> subgoal_history;               // descriptors of completed subgoals
    int t_last_exp = 0;     // timestep of last exploration progress
    int explored_area = 0;  // distinct cells visited
    int area_delta = 0;     // cells newly explored this step
    int total_area = 1;     // free-cell count of the world
    int frontier_new = 0;   // N_fn: frontier nodes newly reached this step
    int node_total = 0;     // N_tn: current map node count

    int visits(Cell s) const {
        auto it = state_visits.find(s);
        return it == state_visits.end() ? 0 : it->second;
    }
};

// Per-step outcomes that trigger reward terms.
struct StepEvents {
    bool reached_goal = false;
    bool reached_milestone = false;
    bool new_subgoal_discovered = false;
    bool hit_obstacle = false;
    double uncertainty = 0.0;  // U(s), in [0, 1]
};

// Unweighted per-term values; total carries the weighted combination.
struct RewardBreakdown {
    double r_ex = 0.0;
    double r_in = 0.0;
    double r_sg = 0.0;
    double r_fe = 0.0;
    double r_ep = 0.0;
    double r_ue = 0.0;
    double r_p = 0.0;
    double r_sd = 0.0;
    double r_te = 0.0;
    double r_ob = 0.0;
    double total = 0.0;

    double extrinsic_sum() const { return r_ex; }
    double intrinsic_sum() const { return r_in + r_sg + r_fe + r_ep + r_ue; }
    double penalty_sum() const { return r_p + r_sd + r_te + r_ob; }
};

// R_goal if the goal was reached, else R_milestone on a milestone, else 0.
double extrinsic_reward(const StepEvents& events, const RewardConfig& cfg);

// r_in + r_sg + r_fe + r_ep + r_ue; requires N(state) >= 1 (counted after
// arrival). Throws if N_fn > 0 while the map is empty.
double intrinsic_reward(Cell state, const StepEvents& events,
                        const ExplorationState& expl, const RewardConfig& cfg);

// r_p + r_sd + r_te + r_ob, always <= 0. `subgoal_feature` is the current
// subgoal's descriptor; subgoals without one (virtual points, the global
// goal) contribute r_sd = 0.
double penalty_reward(Cell state, const std::optional<Descriptor>& subgoal_feature,
                      int t, const StepEvents& events,
                      const ExplorationState& expl, const RewardConfig& cfg);

// Full composite with the itemized breakdown for logging.
RewardBreakdown total_reward(Cell state,
                             const std::optional<Descriptor>& subgoal_feature,
                             int t, const StepEvents& events,
                             const ExplorationState& expl,
                             const RewardConfig& cfg);

// Flat {r_ex, ..., r_ob, total} record for episode logs.
nlohmann::json breakdown_to_json(const RewardBreakdown& b);

}  // namespace toponav
