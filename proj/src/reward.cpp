#include "toponav/reward.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace toponav {

namespace {

double novelty_term(int n_visits) {
    if (n_visits < 1) {
        throw std::invalid_argument("state visit count must be >= 1 when rewarding");
    }
    return 1.0 / std::sqrt(static_cast<double>(n_visits));
}

double frontier_term(const ExplorationState& expl, const RewardConfig& cfg) {
    if (expl.frontier_new == 0) return 0.0;
    if (expl.node_total == 0) {
        throw std::invalid_argument("frontier nodes reached with an empty map");
    }
    return cfg.lambda_fe * static_cast<double>(expl.frontier_new) /
           static_cast<double>(expl.node_total);
}

double revisit_term(int n_visits, const RewardConfig& cfg) {
    if (n_visits < 1) {
        throw std::invalid_argument("state visit count must be >= 1 when penalizing");
    }
    return -cfg.lambda_p * (static_cast<double>(n_visits) - 1.0) /
           std::sqrt(static_cast<double>(n_visits));
}

double diversity_term(const std::optional<Descriptor>& subgoal_feature,
                      const ExplorationState& expl, const RewardConfig& cfg) {
    if (!subgoal_feature || expl.subgoal_history.empty()) return 0.0;
    double max_sim = 0.0;
    for (const Descriptor& h : expl.subgoal_history) {
        max_sim = std::max(max_sim, descriptor_similarity(*subgoal_feature, h));
    }
    return -cfg.lambda_sd * max_sim;
}

}  // namespace

double extrinsic_reward(const StepEvents& events, const RewardConfig& cfg) {
    if (events.reached_goal) return cfg.r_goal;
    if (events.reached_milestone) return cfg.r_milestone;
    return 0.0;
}

double intrinsic_reward(Cell state, const StepEvents& events,
                        const ExplorationState& expl, const RewardConfig& cfg) {
    const double r_in = novelty_term(expl.visits(state));
    const double r_sg = events.new_subgoal_discovered ? cfg.r_sg_bonus : 0.0;
    const double r_fe = frontier_term(expl, cfg);
    const double r_ep = cfg.lambda_ep * static_cast<double>(expl.area_delta) /
                        static_cast<double>(expl.total_area);
    const double r_ue = cfg.lambda_ue * events.uncertainty;
    return r_in + r_sg + r_fe + r_ep + r_ue;
}

double penalty_reward(Cell state, const std::optional<Descriptor>& subgoal_feature,
                      int t, const StepEvents& events,
                      const ExplorationState& expl, const RewardConfig& cfg) {
    if (t < expl.t_last_exp) {
        throw std::invalid_argument("current timestep precedes t_last_exp");
    }
    const double r_p = revisit_term(expl.visits(state), cfg);
    const double r_sd = diversity_term(subgoal_feature, expl, cfg);
    const double r_te = -cfg.lambda_te * static_cast<double>(t - expl.t_last_exp);
    const double r_ob = events.hit_obstacle ? cfg.r_obstacle : 0.0;
    return r_p + r_sd + r_te + r_ob;
}

RewardBreakdown total_reward(Cell state,
                             const std::optional<Descriptor>& subgoal_feature,
                             int t, const StepEvents& events,
                             const ExplorationState& expl,
                             const RewardConfig& cfg) {
    if (t < expl.t_last_exp) {
        throw std::invalid_argument("current timestep precedes t_last_exp");
    }
    RewardBreakdown b;
    b.r_ex = extrinsic_reward(events, cfg);
    b.r_in = novelty_term(expl.visits(state));
    b.r_sg = events.new_subgoal_discovered ? cfg.r_sg_bonus : 0.0;
    b.r_fe = frontier_term(expl, cfg);
    b.r_ep = cfg.lambda_ep * static_cast<double>(expl.area_delta) /
             static_cast<double>(expl.total_area);
    b.r_ue = cfg.lambda_ue * events.uncertainty;
    b.r_p = revisit_term(expl.visits(state), cfg);
    b.r_sd = diversity_term(subgoal_feature, expl, cfg);
    b.r_te = -cfg.lambda_te * static_cast<double>(t - expl.t_last_exp);
    b.r_ob = events.hit_obstacle ? cfg.r_obstacle : 0.0;
    b.total = cfg.alpha * b.extrinsic_sum() + cfg.beta * b.intrinsic_sum() +
              cfg.gamma_pen * b.penalty_sum();
    return b;
}

nlohmann::json breakdown_to_json(const RewardBreakdown& b) {
    return {{"r_ex", b.r_ex}, {"r_in", b.r_in}, {"r_sg", b.r_sg},
            {"r_fe", b.r_fe}, {"r_ep", b.r_ep}, {"r_ue", b.r_ue},
            {"r_p", b.r_p},   {"r_sd", b.r_sd}, {"r_te", b.r_te},
            {"r_ob", b.r_ob}, {"total", b.total}};
}

}  // namespace toponav
