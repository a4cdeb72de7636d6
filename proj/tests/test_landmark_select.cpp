#include "toponav/landmark_select.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace toponav {
namespace {

TEST(NoveltyTest, zero_visits_is_one) {
    EXPECT_DOUBLE_EQ(novelty(0, 0.5), 1.0);
}

TEST(NoveltyTest, one_visit_half_decay) {
    EXPECT_NEAR(novelty(1, 0.5), std::exp(-0.5), 1e-12);
}

TEST(NoveltyTest, strictly_decreasing_in_visits) {
    for (int v = 0; v < 50; ++v) {
        EXPECT_GT(novelty(v, 0.3), novelty(v + 1, 0.3));
    }
}

TEST(NoveltyTest, invalid_arguments_throw) {
    EXPECT_THROW(novelty(-1, 0.5), std::invalid_argument);
    EXPECT_THROW(novelty(0, 0.0), std::invalid_argument);
}

TEST(GoalDirectednessTest, collinear_landmark_scores_one) {
    EXPECT_NEAR(goal_directedness({0, 0}, {2, 2}, {5, 5}), 1.0, 1e-12);
}

TEST(GoalDirectednessTest, opposite_landmark_scores_minus_one) {
    EXPECT_NEAR(goal_directedness({0, 0}, {-3, 0}, {4, 0}), -1.0, 1e-12);
}

TEST(GoalDirectednessTest, perpendicular_landmark_scores_zero) {
    EXPECT_NEAR(goal_directedness({0, 0}, {0, 2}, {4, 0}), 0.0, 1e-12);
}

TEST(GoalDirectednessTest, zero_length_direction_vectors_score_zero) {
    EXPECT_DOUBLE_EQ(goal_directedness({1, 1}, {1, 1}, {4, 0}), 0.0);
    EXPECT_DOUBLE_EQ(goal_directedness({1, 1}, {4, 0}, {1, 1}), 0.0);
}

Landmark lm(int id, Vec2 pos, int visits) {
    return Landmark{.id = id, .position = pos, .feature = {0.0}, .visits = visits};
}

TEST(SelectLandmarkTest, empty_list_returns_none) {
    EXPECT_FALSE(select_landmark({}, {0, 0}, {5, 0}, SelectionConfig{}).has_value());
}

TEST(SelectLandmarkTest, single_landmark_selected) {
    const auto best =
        select_landmark({lm(3, {1, 1}, 4)}, {0, 0}, {5, 0}, SelectionConfig{});
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(best->id, 3);
}

TEST(SelectLandmarkTest, score_formula_prefers_aligned_visited_landmark) {
    // A: unvisited but perpendicular, score 0.5 * 1 + 0.5 * 0 = 0.5.
    // B: visited twice but dead ahead, score 0.5 * e^-2 + 0.5 ~ 0.568.
    const SelectionConfig cfg{.lambda_decay = 1.0, .w_novelty = 0.5, .w_goal = 0.5};
    const Landmark a = lm(0, {0, 2}, 0);
    const Landmark b = lm(1, {2, 0}, 2);
    const double score_a = landmark_score(a, {0, 0}, {5, 0}, cfg);
    const double score_b = landmark_score(b, {0, 0}, {5, 0}, cfg);
    EXPECT_NEAR(score_a, 0.5, 1e-12);
    EXPECT_NEAR(score_b, 0.5 * std::exp(-2.0) + 0.5, 1e-12);
    const auto best = select_landmark({a, b}, {0, 0}, {5, 0}, cfg);
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(best->id, 1);
}

TEST(SelectLandmarkTest, exact_tie_goes_to_lowest_id) {
    // Mirror landmarks: identical novelty and goal-directedness.
    const SelectionConfig cfg{.lambda_decay = 0.5, .w_novelty = 0.4, .w_goal = 0.6};
    const auto best = select_landmark({lm(2, {1, 1}, 1), lm(5, {1, -1}, 1)},
                                      {0, 0}, {4, 0}, cfg);
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(best->id, 2);
}

TEST(SelectLandmarkTest, selection_is_scale_invariant_about_the_robot) {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_int_distribution<int> visits(0, 5);
    std::uniform_real_distribution<double> scale(0.1, 9.0);
    const SelectionConfig cfg{};
    for (int round = 0; round < 100; ++round) {
        const Vec2 goal{coord(gen), coord(gen)};
        std::vector<Landmark> detected;
        for (int i = 0; i < 4; ++i) {
            detected.push_back(lm(i, {coord(gen), coord(gen)}, visits(gen)));
        }
        const double k = scale(gen);
        std::vector<Landmark> scaled = detected;
        for (Landmark& l : scaled) l.position = l.position * k;
        const auto base = select_landmark(detected, {0, 0}, goal, cfg);
        const auto big = select_landmark(scaled, {0, 0}, goal * k, cfg);
        ASSERT_TRUE(base.has_value());
        ASSERT_TRUE(big.has_value());
        EXPECT_EQ(base->id, big->id) << "round " << round;
    }
}

TEST(SelectLandmarkTest, score_stays_within_declared_bounds) {
    std::mt19937 gen(29);
    std::uniform_real_distribution<double> coord(-8.0, 8.0);
    std::uniform_int_distribution<int> visits(0, 20);
    const SelectionConfig cfg{.lambda_decay = 0.7, .w_novelty = 0.3, .w_goal = 1.1};
    for (int i = 0; i < 500; ++i) {
        const Landmark l = lm(0, {coord(gen), coord(gen)}, visits(gen));
        const double s = landmark_score(l, {coord(gen), coord(gen)},
                                        {coord(gen), coord(gen)}, cfg);
        EXPECT_GE(s, -cfg.w_goal - 1e-12);
        EXPECT_LE(s, cfg.w_novelty + cfg.w_goal + 1e-12);
    }
}

TEST(SelectLandmarkTest, zero_goal_weight_reduces_to_novelty_ordering) {
    const SelectionConfig cfg{.lambda_decay = 0.5, .w_novelty = 1.0, .w_goal = 0.0};
    std::vector<Landmark> detected{lm(0, {1, 0}, 3), lm(1, {0, 1}, 0), lm(2, {-1, 0}, 1)};
    std::mt19937 gen(43);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(detected.begin(), detected.end(), gen);
        const auto best = select_landmark(detected, {0, 0}, {9, 9}, cfg);
        ASSERT_TRUE(best.has_value());
        EXPECT_EQ(best->id, 1);  // fewest visits wins regardless of order
    }
}

TEST(SelectLandmarkTest, zero_novelty_weight_reduces_to_goal_alignment) {
    const SelectionConfig cfg{.lambda_decay = 0.5, .w_novelty = 0.0, .w_goal = 1.0};
    std::vector<Landmark> detected{lm(0, {0, 2}, 0), lm(1, {2, 2}, 9), lm(2, {-2, 0}, 0)};
    std::mt19937 gen(47);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(detected.begin(), detected.end(), gen);
        const auto best = select_landmark(detected, {0, 0}, {5, 5}, cfg);
        ASSERT_TRUE(best.has_value());
        EXPECT_EQ(best->id, 1);  // perfectly aligned with the goal direction
    }
}

}  // namespace
}  // namespace toponav
