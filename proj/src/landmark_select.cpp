#include "toponav/landmark_select.hpp"

#include <cmath>
#include <stdexcept>

namespace toponav {

double novelty(int visits, double lambda_decay) {
    if (visits < 0) throw std::invalid_argument("visits must be >= 0");
    if (lambda_decay <= 0.0) throw std::invalid_argument("lambda_decay must be > 0");
    return std::exp(-lambda_decay * visits);
}

double goal_directedness(Vec2 robot, Vec2 landmark, Vec2 goal) {
    const Vec2 to_landmark = landmark - robot;
    const Vec2 to_goal = goal - robot;
    const double denom = norm(to_landmark) * norm(to_goal);
    if (denom == 0.0) return 0.0;
    return dot(to_landmark, to_goal) / denom;
}

double landmark_score(const Landmark& lm, Vec2 robot, Vec2 goal,
                      const SelectionConfig& cfg) {
    return cfg.w_novelty * novelty(lm.visits, cfg.lambda_decay) +
           cfg.w_goal * goal_directedness(robot, lm.position, goal);
}

std::optional<Landmark> select_landmark(const std::vector<Landmark>& detected,
                                        Vec2 robot, Vec2 goal,
                                        const SelectionConfig& cfg) {
    std::optional<Landmark> best;
    double best_score = 0.0;
    for (const Landmark& lm : detected) {
        const double score = landmark_score(lm, robot, goal, cfg);
        if (!best || score > best_score ||
            (score == best_score && lm.id < best->id)) {
            best = lm;
            best_score = score;
        }
    }
    return best;
}

}  // namespace toponav
