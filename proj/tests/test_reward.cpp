#include "toponav/reward.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace toponav {
namespace {

constexpr Cell kState{3, 3};

ExplorationState base_state(int visits) {
    ExplorationState expl;
    expl.state_visits[kState] = visits;
    expl.total_area = 100;
    expl.node_total = 1;
    return expl;
}

TEST(ExtrinsicRewardTest, goal_pays_r_goal) {
    RewardConfig cfg;
    cfg.r_goal = 100.0;
    EXPECT_DOUBLE_EQ(extrinsic_reward({.reached_goal = true}, cfg), 100.0);
}

TEST(ExtrinsicRewardTest, milestone_pays_r_milestone) {
    RewardConfig cfg;
    cfg.r_milestone = 10.0;
    EXPECT_DOUBLE_EQ(extrinsic_reward({.reached_milestone = true}, cfg), 10.0);
}

TEST(ExtrinsicRewardTest, goal_dominates_simultaneous_milestone) {
    RewardConfig cfg;
    EXPECT_DOUBLE_EQ(
        extrinsic_reward({.reached_goal = true, .reached_milestone = true}, cfg),
        cfg.r_goal);
}

TEST(ExtrinsicRewardTest, nothing_pays_zero) {
    EXPECT_DOUBLE_EQ(extrinsic_reward({}, RewardConfig{}), 0.0);
}

TEST(IntrinsicRewardTest, first_visit_with_no_events_is_one) {
    RewardConfig cfg;
    cfg.lambda_fe = cfg.lambda_ep = cfg.lambda_ue = 0.0;
    EXPECT_DOUBLE_EQ(intrinsic_reward(kState, {}, base_state(1), cfg), 1.0);
}

TEST(IntrinsicRewardTest, four_visits_give_half) {
    RewardConfig cfg;
    cfg.lambda_fe = cfg.lambda_ep = cfg.lambda_ue = 0.0;
    EXPECT_DOUBLE_EQ(intrinsic_reward(kState, {}, base_state(4), cfg), 0.5);
}

TEST(IntrinsicRewardTest, frontier_share_term) {
    RewardConfig cfg;
    cfg.lambda_ep = cfg.lambda_ue = 0.0;
    cfg.lambda_fe = 1.0;
    ExplorationState expl = base_state(1);
    expl.frontier_new = 1;
    expl.node_total = 4;
    // r_in (1.0) + r_fe (0.25)
    EXPECT_DOUBLE_EQ(intrinsic_reward(kState, {}, expl, cfg), 1.25);
}

TEST(IntrinsicRewardTest, frontier_with_empty_map_is_contract_violation) {
    ExplorationState expl = base_state(1);
    expl.frontier_new = 2;
    expl.node_total = 0;
    EXPECT_THROW(intrinsic_reward(kState, {}, expl, RewardConfig{}),
                 std::invalid_argument);
}

TEST(IntrinsicRewardTest, unvisited_state_is_contract_violation) {
    ExplorationState expl = base_state(1);
    EXPECT_THROW(intrinsic_reward({9, 9}, {}, expl, RewardConfig{}),
                 std::invalid_argument);
}

TEST(PenaltyRewardTest, single_visit_has_no_revisit_penalty) {
    RewardConfig cfg;
    cfg.lambda_p = 1.0;
    cfg.lambda_te = 0.0;
    EXPECT_DOUBLE_EQ(penalty_reward(kState, std::nullopt, 0, {}, base_state(1), cfg),
                     0.0);
}

TEST(PenaltyRewardTest, four_visits_penalize_three_halves) {
    RewardConfig cfg;
    cfg.lambda_p = 1.0;
    cfg.lambda_te = 0.0;
    EXPECT_DOUBLE_EQ(penalty_reward(kState, std::nullopt, 0, {}, base_state(4), cfg),
                     -1.5);
}

TEST(PenaltyRewardTest, identical_subgoal_in_history_pays_full_diversity_penalty) {
    RewardConfig cfg;
    cfg.lambda_p = 0.0;
    cfg.lambda_te = 0.0;
    cfg.lambda_sd = 2.0;
    ExplorationState expl = base_state(1);
    const Descriptor feature{1.0, 2.0, 3.0};
    expl.subgoal_history.push_back(feature);
    // similarity exp(0) = 1, so r_sd = -lambda_sd.
    EXPECT_DOUBLE_EQ(penalty_reward(kState, feature, 0, {}, expl, cfg), -2.0);
}

TEST(PenaltyRewardTest, empty_history_has_no_diversity_penalty) {
    RewardConfig cfg;
    cfg.lambda_p = 0.0;
    cfg.lambda_te = 0.0;
    cfg.lambda_sd = 2.0;
    EXPECT_DOUBLE_EQ(
        penalty_reward(kState, Descriptor{1.0, 2.0}, 0, {}, base_state(1), cfg), 0.0);
}

TEST(PenaltyRewardTest, stagnation_penalty_grows_with_time) {
    RewardConfig cfg;
    cfg.lambda_p = 0.0;
    cfg.lambda_te = 0.01;
    ExplorationState expl = base_state(1);
    expl.t_last_exp = 10;
    EXPECT_DOUBLE_EQ(penalty_reward(kState, std::nullopt, 30, {}, expl, cfg), -0.2);
}

TEST(PenaltyRewardTest, obstacle_hit_pays_r_obstacle) {
    RewardConfig cfg;
    cfg.lambda_p = 0.0;
    cfg.lambda_te = 0.0;
    cfg.r_obstacle = -5.0;
    EXPECT_DOUBLE_EQ(penalty_reward(kState, std::nullopt, 0,
                                    {.hit_obstacle = true}, base_state(1), cfg),
                     -5.0);
}

TEST(PenaltyRewardTest, timestep_before_last_exploration_is_contract_violation) {
    ExplorationState expl = base_state(1);
    expl.t_last_exp = 5;
    EXPECT_THROW(penalty_reward(kState, std::nullopt, 4, {}, expl, RewardConfig{}),
                 std::invalid_argument);
}

TEST(TotalRewardTest, all_zero_components_sum_to_zero) {
    RewardConfig cfg;
    cfg.lambda_fe = cfg.lambda_ep = cfg.lambda_ue = 0.0;
    cfg.lambda_p = cfg.lambda_sd = cfg.lambda_te = 0.0;
    cfg.beta = 0.0;
    cfg.gamma_pen = 0.0;
    const RewardBreakdown b = total_reward(kState, std::nullopt, 0, {}, base_state(1), cfg);
    EXPECT_DOUBLE_EQ(b.total, 0.0);
}

TEST(TotalRewardTest, pure_extrinsic_goal_reward) {
    RewardConfig cfg;
    cfg.alpha = 1.0;
    cfg.beta = 0.0;
    cfg.gamma_pen = 0.0;
    cfg.r_goal = 100.0;
    const RewardBreakdown b = total_reward(kState, std::nullopt, 0,
                                           {.reached_goal = true}, base_state(1), cfg);
    EXPECT_DOUBLE_EQ(b.total, 100.0);
}

TEST(TotalRewardTest, declared_component_sums_combine) {
    // r_ex = 0, intrinsic sum 1.0 (r_in only), penalty sum -0.5 (r_ob only):
    // total = 1*0 + 0.5*1 + 0.5*(-0.5) = 0.25.
    RewardConfig cfg;
    cfg.alpha = 1.0;
    cfg.beta = 0.5;
    cfg.gamma_pen = 0.5;
    cfg.lambda_fe = cfg.lambda_ep = cfg.lambda_ue = 0.0;
    cfg.lambda_p = cfg.lambda_sd = cfg.lambda_te = 0.0;
    cfg.r_obstacle = -0.5;
    const RewardBreakdown b = total_reward(kState, std::nullopt, 0,
                                           {.hit_obstacle = true}, base_state(1), cfg);
    EXPECT_DOUBLE_EQ(b.intrinsic_sum(), 1.0);
    EXPECT_DOUBLE_EQ(b.penalty_sum(), -0.5);
    EXPECT_DOUBLE_EQ(b.total, 0.25);
}

TEST(TotalRewardTest, novelty_decreases_and_revisit_penalty_deepens_over_visits) {
    RewardConfig cfg;
    double prev_in = 2.0;
    double prev_p = 1.0;
    for (int n = 1; n <= 100; ++n) {
        const RewardBreakdown b =
            total_reward(kState, std::nullopt, 0, {}, base_state(n), cfg);
        EXPECT_LT(b.r_in, prev_in);
        if (n > 1) EXPECT_LT(b.r_p, prev_p);
        EXPECT_DOUBLE_EQ(n == 1 ? 0.0 : b.r_p, b.r_p);
        prev_in = b.r_in;
        prev_p = b.r_p;
    }
}

TEST(TotalRewardTest, intrinsic_nonnegative_penalty_nonpositive_randomized) {
    std::mt19937 gen(61);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> visits(1, 50);
    std::uniform_int_distribution<int> small(0, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 500; ++i) {
        RewardConfig cfg;
        cfg.lambda_fe = unit(gen);
        cfg.lambda_ep = unit(gen);
        cfg.lambda_ue = unit(gen);
        cfg.lambda_p = unit(gen);
        cfg.lambda_sd = unit(gen);
        cfg.lambda_te = unit(gen);
        cfg.r_sg_bonus = unit(gen);
        cfg.r_obstacle = -unit(gen) - 0.01;
        ExplorationState expl = base_state(visits(gen));
        expl.frontier_new = small(gen);
        expl.node_total = expl.frontier_new + small(gen) + 1;
        expl.area_delta = coin(gen);
        expl.subgoal_history.push_back({unit(gen), unit(gen)});
        const StepEvents ev{.reached_goal = coin(gen) == 1,
                            .reached_milestone = coin(gen) == 1,
                            .new_subgoal_discovered = coin(gen) == 1,
                            .hit_obstacle = coin(gen) == 1,
                            .uncertainty = unit(gen)};
        const int t = small(gen);
        const Descriptor sg{unit(gen), unit(gen)};
        EXPECT_GE(intrinsic_reward(kState, ev, expl, cfg), 0.0);
        EXPECT_LE(penalty_reward(kState, sg, t, ev, expl, cfg), 0.0);
    }
}

TEST(TotalRewardTest, breakdown_recomposition_is_exact) {
    std::mt19937 gen(67);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> visits(1, 30);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 500; ++i) {
        RewardConfig cfg;
        cfg.alpha = unit(gen) * 2.0;
        cfg.beta = unit(gen);
        cfg.gamma_pen = unit(gen);
        ExplorationState expl = base_state(visits(gen));
        expl.frontier_new = coin(gen);
        expl.node_total = 3;
        expl.area_delta = coin(gen);
        const StepEvents ev{.reached_goal = coin(gen) == 1,
                            .hit_obstacle = coin(gen) == 1,
                            .uncertainty = unit(gen)};
        const RewardBreakdown b = total_reward(kState, std::nullopt, 2, ev, expl, cfg);
        // Bitwise identical recomposition from the returned parts.
        EXPECT_EQ(b.total, cfg.alpha * b.extrinsic_sum() +
                               cfg.beta * b.intrinsic_sum() +
                               cfg.gamma_pen * b.penalty_sum());
    }
}

TEST(TotalRewardTest, appending_own_feature_to_history_costs_lambda_sd) {
    RewardConfig cfg;
    ExplorationState expl = base_state(1);
    const Descriptor sg{4.0, 2.0};
    const RewardBreakdown before = total_reward(kState, sg, 0, {}, expl, cfg);
    EXPECT_DOUBLE_EQ(before.r_sd, 0.0);
    expl.subgoal_history.push_back(sg);
    const RewardBreakdown after = total_reward(kState, sg, 0, {}, expl, cfg);
    EXPECT_DOUBLE_EQ(after.r_sd, -cfg.lambda_sd);
}

TEST(BreakdownJsonTest, record_has_all_eleven_keys) {
    const nlohmann::json j = breakdown_to_json(RewardBreakdown{});
    for (const char* key : {"r_ex", "r_in", "r_sg", "r_fe", "r_ep", "r_ue", "r_p",
                            "r_sd", "r_te", "r_ob", "total"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

}  // namespace
}  // namespace toponav
