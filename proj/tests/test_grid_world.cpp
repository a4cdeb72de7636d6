#include "toponav/grid_world.hpp"

#include <cmath>
#include <deque>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace toponav {
namespace {

GridWorld empty_world(int w, int h, Cell start, Cell goal, double slip = 0.0) {
    return GridWorld(w, h, {}, {}, start, goal, 5.0, slip);
}

TEST(StepTest, deterministic_move_with_zero_slip) {
    const GridWorld world = empty_world(5, 5, {2, 2}, {4, 4});
    Rng rng(1);
    const StepOutcome out = world.step({2, 2}, Action::East, rng);
    EXPECT_EQ(out.next_state, (Cell{3, 2}));
    EXPECT_FALSE(out.events.hit_obstacle);
    EXPECT_FALSE(out.events.reached_goal);
}

TEST(StepTest, moving_into_obstacle_stays_and_flags_hit) {
    const GridWorld world(5, 5, {{3, 2}}, {}, {2, 2}, {4, 4}, 5.0, 0.0);
    Rng rng(1);
    const StepOutcome out = world.step({2, 2}, Action::East, rng);
    EXPECT_EQ(out.next_state, (Cell{2, 2}));
    EXPECT_TRUE(out.events.hit_obstacle);
}

TEST(StepTest, moving_out_of_bounds_stays_and_flags_hit) {
    const GridWorld world = empty_world(5, 5, {0, 0}, {4, 4});
    Rng rng(1);
    const StepOutcome out = world.step({0, 0}, Action::West, rng);
    EXPECT_EQ(out.next_state, (Cell{0, 0}));
    EXPECT_TRUE(out.events.hit_obstacle);
}

TEST(StepTest, reaching_goal_sets_event) {
    const GridWorld world = empty_world(5, 5, {3, 4}, {4, 4});
    Rng rng(1);
    const StepOutcome out = world.step({3, 4}, Action::East, rng);
    EXPECT_TRUE(out.events.reached_goal);
}

TEST(StepTest, stepping_from_obstacle_is_contract_violation) {
    const GridWorld world(5, 5, {{1, 1}}, {}, {0, 0}, {4, 4}, 5.0, 0.0);
    Rng rng(1);
    EXPECT_THROW(world.step({1, 1}, Action::North, rng), std::invalid_argument);
}

TEST(StepTest, slip_frequency_matches_binomial_bound) {
    const GridWorld world = empty_world(21, 21, {10, 10}, {20, 20}, 0.2);
    Rng rng(17);
    const int trials = 10000;
    int intended = 0;
    for (int i = 0; i < trials; ++i) {
        const StepOutcome out = world.step({10, 10}, Action::North, rng);
        if (out.next_state == (Cell{10, 11})) ++intended;
    }
    EXPECT_NEAR(static_cast<double>(intended) / trials, 0.8, 0.02);
}

TEST(StepTest, slip_moves_perpendicular_only) {
    const GridWorld world = empty_world(21, 21, {10, 10}, {20, 20}, 0.9);
    Rng rng(19);
    for (int i = 0; i < 2000; ++i) {
        const StepOutcome out = world.step({10, 10}, Action::East, rng);
        // Never resolves to the opposite direction.
        EXPECT_NE(out.next_state, (Cell{9, 10}));
    }
}

TEST(StepTest, never_teleports) {
    Rng world_rng(23);
    for (int round = 0; round < 20; ++round) {
        const GridWorld world = GridWorld::make_scenario(
            3, 12, static_cast<std::uint64_t>(round), 5.0, 0.3);
        Rng rng(round);
        Cell s = world.start();
        for (int t = 0; t < 200; ++t) {
            const Action a = static_cast<Action>(rng.uniform_int(0, 3));
            const StepOutcome out = world.step(s, a, rng);
            const int dist = std::abs(out.next_state.x - s.x) +
                             std::abs(out.next_state.y - s.y);
            EXPECT_LE(dist, 1);
            s = out.next_state;
        }
    }
}

TEST(LineOfSightTest, same_cell_is_visible) {
    const GridWorld world(5, 5, {{2, 2}}, {}, {0, 0}, {4, 4}, 5.0, 0.0);
    EXPECT_TRUE(world.line_of_sight({2, 2}, {2, 2}));
}

TEST(LineOfSightTest, clear_row_is_visible) {
    const GridWorld world = empty_world(8, 3, {0, 1}, {7, 1});
    EXPECT_TRUE(world.line_of_sight({0, 1}, {7, 1}));
}

TEST(LineOfSightTest, obstacle_midway_blocks_row) {
    const GridWorld world(8, 3, {{4, 1}}, {}, {0, 1}, {7, 1}, 5.0, 0.0);
    EXPECT_FALSE(world.line_of_sight({0, 1}, {7, 1}));
}

TEST(LineOfSightTest, endpoint_obstacles_do_not_block) {
    const GridWorld world(8, 3, {{7, 1}}, {}, {0, 1}, {6, 1}, 5.0, 0.0);
    EXPECT_TRUE(world.line_of_sight({0, 1}, {7, 1}));
}

TEST(LineOfSightTest, symmetry_exhaustive_on_random_world) {
    Rng rng(31);
    std::set<Cell> obstacles;
    for (int i = 0; i < 30; ++i) {
        const Cell c{rng.uniform_int(0, 14), rng.uniform_int(0, 14)};
        if (c == Cell{0, 0} || c == Cell{14, 14}) continue;
        obstacles.insert(c);
    }
    const GridWorld world(15, 15, obstacles, {}, {0, 0}, {14, 14}, 5.0, 0.0);
    for (int ax = 0; ax < 15; ++ax) {
        for (int ay = 0; ay < 15; ++ay) {
            for (int bx = ax; bx < 15; ++bx) {
                for (int by = 0; by < 15; ++by) {
                    const Cell a{ax, ay};
                    const Cell b{bx, by};
                    ASSERT_EQ(world.line_of_sight(a, b), world.line_of_sight(b, a))
                        << ax << "," << ay << " vs " << bx << "," << by;
                }
            }
        }
    }
}

Landmark make_landmark(int id, double x, double y) {
    return Landmark{.id = id, .position = {x, y}, .feature = {double(id), 0.0}};
}

TEST(DetectTest, landmark_in_same_cell_is_detected) {
    const GridWorld world(5, 5, {}, {make_landmark(0, 2, 2)}, {2, 2}, {4, 4}, 3.0, 0.0);
    const auto detected = world.detect_landmarks({2, 2});
    ASSERT_EQ(detected.size(), 1u);
    EXPECT_EQ(detected[0].id, 0);
}

TEST(DetectTest, landmark_behind_wall_is_not_detected) {
    const GridWorld world(7, 3, {{3, 1}}, {make_landmark(0, 5, 1)}, {1, 1}, {6, 2},
                          6.0, 0.0);
    EXPECT_TRUE(world.detect_landmarks({1, 1}).empty());
}

TEST(DetectTest, landmark_beyond_range_is_not_detected) {
    const GridWorld world(9, 3, {}, {make_landmark(0, 7, 1)}, {1, 1}, {8, 2}, 5.0, 0.0);
    // distance 6 > range 5
    EXPECT_TRUE(world.detect_landmarks({1, 1}).empty());
    EXPECT_EQ(world.detect_landmarks({2, 1}).size(), 1u);
}

TEST(DetectTest, results_are_sorted_by_id) {
    const GridWorld world(5, 5, {},
                          {make_landmark(2, 1, 1), make_landmark(0, 3, 3),
                           make_landmark(1, 2, 2)},
                          {2, 2}, {4, 4}, 5.0, 0.0);
    const auto detected = world.detect_landmarks({2, 2});
    ASSERT_EQ(detected.size(), 3u);
    EXPECT_EQ(detected[0].id, 0);
    EXPECT_EQ(detected[1].id, 1);
    EXPECT_EQ(detected[2].id, 2);
}

TEST(DetectTest, exhaustive_range_and_occlusion_consistency) {
    const std::set<Cell> obstacles{{4, 4}, {4, 5}, {5, 4}, {2, 7}, {7, 2}};
    std::vector<Landmark> landmarks{make_landmark(0, 1, 1), make_landmark(1, 8, 8),
                                    make_landmark(2, 5, 5), make_landmark(3, 1, 8)};
    const GridWorld world(10, 10, obstacles, landmarks, {0, 0}, {9, 9}, 4.0, 0.0);
    for (int x = 0; x < 10; ++x) {
        for (int y = 0; y < 10; ++y) {
            const Cell s{x, y};
            if (world.obstacle(s)) continue;
            const auto detected = world.detect_landmarks(s);
            std::set<int> detected_ids;
            for (const Landmark& lm : detected) detected_ids.insert(lm.id);
            for (const Landmark& lm : landmarks) {
                const Cell lc{static_cast<int>(lm.position.x),
                              static_cast<int>(lm.position.y)};
                const bool in_range =
                    distance(s.center(), lm.position) <= world.detection_range();
                const bool visible = world.line_of_sight(s, lc);
                EXPECT_EQ(detected_ids.count(lm.id) == 1, in_range && visible)
                    << "cell " << x << "," << y << " landmark " << lm.id;
            }
        }
    }
}

// Independent BFS for generator connectivity checks.
bool bfs_reachable(const GridWorld& world, Cell from, Cell to) {
    std::set<Cell> seen{from};
    std::deque<Cell> queue{from};
    while (!queue.empty()) {
        const Cell c = queue.front();
        queue.pop_front();
        if (c == to) return true;
        for (int a = 0; a < kNumActions; ++a) {
            const Cell n = neighbor(c, static_cast<Action>(a));
            if (!world.free_cell(n) || seen.count(n)) continue;
            seen.insert(n);
            queue.push_back(n);
        }
    }
    return false;
}

TEST(ScenarioTest, kind_one_has_no_obstacles_or_landmarks) {
    const GridWorld world = GridWorld::make_scenario(1, 20, 42);
    EXPECT_TRUE(world.obstacles().empty());
    EXPECT_TRUE(world.landmarks().empty());
}

TEST(ScenarioTest, kind_two_has_landmarks_no_obstacles) {
    const GridWorld world = GridWorld::make_scenario(2, 20, 42);
    EXPECT_TRUE(world.obstacles().empty());
    EXPECT_EQ(world.landmarks().size(), 12u);  // 3% of 400 free cells
}

TEST(ScenarioTest, same_seed_gives_identical_world) {
    const GridWorld a = GridWorld::make_scenario(3, 20, 7);
    const GridWorld b = GridWorld::make_scenario(3, 20, 7);
    EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(ScenarioTest, different_seeds_give_different_worlds) {
    const GridWorld a = GridWorld::make_scenario(3, 20, 7);
    const GridWorld b = GridWorld::make_scenario(3, 20, 8);
    EXPECT_NE(a.to_json(), b.to_json());
}

TEST(ScenarioTest, kind_three_start_goal_connected) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const GridWorld world = GridWorld::make_scenario(3, 20, seed);
        EXPECT_FALSE(world.obstacles().empty());
        EXPECT_FALSE(world.landmarks().empty());
        EXPECT_TRUE(bfs_reachable(world, world.start(), world.goal())) << seed;
    }
}

TEST(ScenarioTest, landmark_descriptors_are_pairwise_distinct) {
    const GridWorld world = GridWorld::make_scenario(3, 30, 5);
    const auto& lms = world.landmarks();
    for (std::size_t i = 0; i < lms.size(); ++i) {
        for (std::size_t j = i + 1; j < lms.size(); ++j) {
            EXPECT_NE(lms[i].feature, lms[j].feature);
        }
    }
}

TEST(ScenarioTest, undersized_world_is_rejected) {
    EXPECT_THROW(GridWorld::make_scenario(1, 9, 1), std::invalid_argument);
    EXPECT_THROW(GridWorld::make_scenario(4, 20, 1), std::invalid_argument);
}

TEST(WorldJsonTest, roundtrip_preserves_world) {
    const GridWorld world = GridWorld::make_scenario(3, 15, 11);
    const GridWorld back = GridWorld::from_json(world.to_json());
    EXPECT_EQ(back.to_json(), world.to_json());
}

}  // namespace
}  // namespace toponav
