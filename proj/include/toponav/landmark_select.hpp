#pragma once

#include <optional>
#include <vector>

#include "toponav/descriptor.hpp"
#include "toponav/geometry.hpp"

namespace toponav {

// A detectable world feature; candidate subgoal.
struct Landmark {
    int id = 0;
    Vec2 position;
    Descriptor feature;
    int visits = 0;
};

struct SelectionConfig {
    double lambda_decay = 0.5;  // novelty decay
    double w_novelty = 0.4;
    double w_goal = 0.6;
};

// exp(-lambda * visits), in (0, 1].
double novelty(int visits, double lambda_decay);

// Cosine of the angle between (landmark - robot) and (goal - robot); 0 when
// either direction vector is zero-length.
double goal_directedness(Vec2 robot, Vec2 landmark, Vec2 goal);

double landmark_score(const Landmark& lm, Vec2 robot, Vec2 goal,
                      const SelectionConfig& cfg);

// Highest-scoring landmark, ties to the lowest id; nullopt for an empty list.
std::optional<Landmark> select_landmark(const std::vector<Landmark>& detected,
                                        Vec2 robot, Vec2 goal,
                                        const SelectionConfig& cfg);

}  // namespace toponav
