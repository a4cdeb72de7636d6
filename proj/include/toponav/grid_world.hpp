#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "toponav/geometry.hpp"
#include "toponav/landmark_select.hpp"
#include "toponav/reward.hpp"
#include "toponav/rng.hpp"

#include <nlohmann/json_fwd.hpp>

namespace toponav {

struct StepOutcome {
    Cell next_state;
    StepEvents events;               // reached_goal / hit_obstacle filled here
    std::vector<Landmark> detected;  // landmarks visible from next_state
};

// Deterministic seeded grid world. Immutable after construction; any number
// of episode threads may read one world concurrently.
class GridWorld {
  public:
    GridWorld(int width, int height, std::set<Cell> obstacles,
              std::vector<Landmark> landmarks, Cell start, Cell goal,
              double detection_range, double slip_prob);

    // Scenario generators:
    //   1 — goal reaching: no obstacles, no landmarks
    //   2 — feature-based navigation: landmarks only (~3% of free cells)
    //   3 — complex terrain: ~15% obstacles plus landmarks, regenerated until
    //       the goal is reachable
    static GridWorld make_scenario(int kind, int size, std::uint64_t seed,
                                   double detection_range = 5.0,
                                   double slip_prob = 0.1, int feature_dim = 8);

    // One primitive move. With probability slip_prob the action resolves to a
    // uniformly random perpendicular direction. Moves into obstacles or out of
    // bounds keep the position and set hit_obstacle.
    StepOutcome step(Cell s, Action a, Rng& rng) const;

    // Landmarks within detection_range with unobstructed line of sight,
    // sorted by id.
    std::vector<Landmark> detect_landmarks(Cell s) const;

    // True iff the open segment between cell centers crosses no obstacle cell
    // strictly between the endpoints. Symmetric.
    bool line_of_sight(Cell a, Cell b) const;

    int width() const { return width_; }
    int height() const { return height_; }
    Cell start() const { return start_; }
    Cell goal() const { return goal_; }
    double detection_range() const { return detection_range_; }
    double slip_prob() const { return slip_prob_; }
    const std::vector<Landmark>& landmarks() const { return landmarks_; }
    const std::set<Cell>& obstacles() const { return obstacles_; }

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }
    bool obstacle(Cell c) const;
    bool free_cell(Cell c) const { return in_bounds(c) && !obstacle(c); }
    int free_cell_count() const { return free_cells_; }

    // BFS over free cells; used by generators and tests.
    bool reachable(Cell from, Cell to) const;
    int bfs_distance(Cell from, Cell to) const;  // -1 if unreachable

    nlohmann::json to_json() const;
    static GridWorld from_json(const nlohmann::json& doc);

  private:
    int width_;
    int height_;
    std::set<Cell> obstacles_;
    std::vector<Landmark> landmarks_;
    Cell start_;
    Cell goal_;
    double detection_range_;
    double slip_prob_;
    int free_cells_ = 0;
    std::vector<char> obstacle_grid_;  // row-major lookup
};

}  // namespace toponav
