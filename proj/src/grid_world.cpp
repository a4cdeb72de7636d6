#include "toponav/grid_world.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace toponav {

GridWorld::GridWorld(int width, int height, std::set<Cell> obstacles,
                     std::vector<Landmark> landmarks, Cell start, Cell goal,
                     double detection_range, double slip_prob)
    : width_(width),
      height_(height),
      obstacles_(std::move(obstacles)),
      landmarks_(std::move(landmarks)),
      start_(start),
      goal_(goal),
      detection_range_(detection_range),
      slip_prob_(slip_prob) {
    if (width < 1 || height < 1) throw std::invalid_argument("degenerate world");
    if (detection_range <= 0.0) throw std::invalid_argument("detection_range must be > 0");
    if (slip_prob < 0.0 || slip_prob >= 1.0) {
        throw std::invalid_argument("slip_prob must be in [0, 1)");
    }
    obstacle_grid_.assign(static_cast<std::size_t>(width_) * height_, 0);
    for (Cell c : obstacles_) {
        if (!in_bounds(c)) throw std::invalid_argument("obstacle out of bounds");
        obstacle_grid_[static_cast<std::size_t>(c.y) * width_ + c.x] = 1;
    }
    free_cells_ = width_ * height_ - static_cast<int>(obstacles_.size());
    if (!free_cell(start_) || !free_cell(goal_)) {
        throw std::invalid_argument("start and goal must be free cells");
    }
    for (const Landmark& lm : landmarks_) {
        const Cell c{static_cast<int>(std::lround(lm.position.x)),
                     static_cast<int>(std::lround(lm.position.y))};
        if (!free_cell(c)) throw std::invalid_argument("landmark on non-free cell");
    }
}

bool GridWorld::obstacle(Cell c) const {
    if (!in_bounds(c)) return false;
    return obstacle_grid_[static_cast<std::size_t>(c.y) * width_ + c.x] != 0;
}

StepOutcome GridWorld::step(Cell s, Action a, Rng& rng) const {
    if (!free_cell(s)) {
        throw std::invalid_argument("step from a non-free cell");
    }
    Action resolved = a;
    if (rng.uniform() < slip_prob_) {
        const auto [p1, p2] = perpendicular(a);
        resolved = rng.uniform_int(0, 1) == 0 ? p1 : p2;
    }
    StepOutcome out;
    const Cell target = neighbor(s, resolved);
    if (free_cell(target)) {
        out.next_state = target;
    } else {
        out.next_state = s;
        out.events.hit_obstacle = true;
    }
    out.events.reached_goal = (out.next_state == goal_);
    out.detected = detect_landmarks(out.next_state);
    return out;
}

std::vector<Landmark> GridWorld::detect_landmarks(Cell s) const {
    std::vector<Landmark> out;
    for (const Landmark& lm : landmarks_) {
        const Cell lc{static_cast<int>(std::lround(lm.position.x)),
                      static_cast<int>(std::lround(lm.position.y))};
        if (distance(s.center(), lm.position) > detection_range_) continue;
        if (!line_of_sight(s, lc)) continue;
        out.push_back(lm);
    }
    std::sort(out.begin(), out.end(),
              [](const Landmark& a, const Landmark& b) { return a.id < b.id; });
    return out;
}

bool GridWorld::line_of_sight(Cell a, Cell b) const {
    if (a == b) return true;
    const int dx = b.x - a.x;
    const int dy = b.y - a.y;
    const int lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
    const int lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
    // A cell strictly between the endpoints blocks iff the center-to-center
    // segment passes through its interior: |2*cross| < |dx| + |dy|, in exact
    // integer arithmetic. Corner touches do not block.
    const long long thick = std::llabs(dx) + std::llabs(dy);
    for (int y = lo_y; y <= hi_y; ++y) {
        for (int x = lo_x; x <= hi_x; ++x) {
            const Cell c{x, y};
            if (c == a || c == b) continue;
            if (!obstacle(c)) continue;
            const long long cross = static_cast<long long>(x - a.x) * dy -
                                    static_cast<long long>(y - a.y) * dx;
            if (std::llabs(2 * cross) < thick) return false;
        }
    }
    return true;
}

bool GridWorld::reachable(Cell from, Cell to) const {
    return bfs_distance(from, to) >= 0;
}

int GridWorld::bfs_distance(Cell from, Cell to) const {
    if (!free_cell(from) || !free_cell(to)) return -1;
    std::vector<int> dist(static_cast<std::size_t>(width_) * height_, -1);
    auto idx = [this](Cell c) {
        return static_cast<std::size_t>(c.y) * width_ + c.x;
    };
    std::deque<Cell> queue{from};
    dist[idx(from)] = 0;
    while (!queue.empty()) {
        const Cell c = queue.front();
        queue.pop_front();
        if (c == to) return dist[idx(c)];
        for (int ai = 0; ai < kNumActions; ++ai) {
            const Cell n = neighbor(c, static_cast<Action>(ai));
            if (!free_cell(n) || dist[idx(n)] >= 0) continue;
            dist[idx(n)] = dist[idx(c)] + 1;
            queue.push_back(n);
        }
    }
    return -1;
}

namespace {

Descriptor random_descriptor(int dim, Rng& rng) {
    Descriptor d(static_cast<std::size_t>(dim));
    for (double& v : d) v = rng.uniform() * 10.0;
    return d;
}

Cell random_free_cell(const std::set<Cell>& obstacles, int size, Rng& rng) {
    while (true) {
        const Cell c{rng.uniform_int(0, size - 1), rng.uniform_int(0, size - 1)};
        if (!obstacles.count(c)) return c;
    }
}

}  // namespace

GridWorld GridWorld::make_scenario(int kind, int size, std::uint64_t seed,
                                   double detection_range, double slip_prob,
                                   int feature_dim) {
    if (kind < 1 || kind > 3) throw std::invalid_argument("scenario kind must be 1..3");
    if (size < 10) throw std::invalid_argument("scenario size must be >= 10");

    Rng rng = Rng::derive(seed, "world");
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::set<Cell> obstacles;
        if (kind == 3) {
            const int target = static_cast<int>(size * size * 0.15);
            while (static_cast<int>(obstacles.size()) < target) {
                obstacles.insert(
                    {rng.uniform_int(0, size - 1), rng.uniform_int(0, size - 1)});
            }
        }
        Cell start = random_free_cell(obstacles, size, rng);
        Cell goal = start;
        // Keep tasks long-horizon: start/goal at least half the world apart.
        for (int tries = 0; tries < 1000; ++tries) {
            goal = random_free_cell(obstacles, size, rng);
            if (goal != start && cell_distance(start, goal) >= size / 2.0) break;
        }
        if (goal == start) continue;

        std::vector<Landmark> landmarks;
        if (kind >= 2) {
            const int free_count = size * size - static_cast<int>(obstacles.size());
            const int count = std::max(1, static_cast<int>(free_count * 0.03));
            std::set<Cell> used;
            while (static_cast<int>(landmarks.size()) < count) {
                const Cell c = random_free_cell(obstacles, size, rng);
                if (used.count(c) || c == start || c == goal) continue;
                used.insert(c);
                Descriptor feat = random_descriptor(feature_dim, rng);
                // Descriptors must be pairwise distinct; redraw on collision.
                bool duplicate = false;
                for (const Landmark& lm : landmarks) {
                    if (lm.feature == feat) duplicate = true;
                }
                if (duplicate) continue;
                landmarks.push_back(Landmark{
                    .id = static_cast<int>(landmarks.size()),
                    .position = c.center(),
                    .feature = std::move(feat),
                    .visits = 0});
            }
        }

        GridWorld world(size, size, std::move(obstacles), std::move(landmarks),
                        start, goal, detection_range, slip_prob);
        if (world.reachable(start, goal)) return world;
    }
    throw std::runtime_error("scenario generation failed: goal unreachable after 100 attempts");
}

nlohmann::json GridWorld::to_json() const {
    nlohmann::json obstacles = nlohmann::json::array();
    for (Cell c : obstacles_) obstacles.push_back({c.x, c.y});
    nlohmann::json landmarks = nlohmann::json::array();
    for (const Landmark& lm : landmarks_) {
        landmarks.push_back({{"id", lm.id},
                             {"x", lm.position.x},
                             {"y", lm.position.y},
                             {"feature", lm.feature}});
    }
    return {{"width", width_},
            {"height", height_},
            {"obstacles", obstacles},
            {"landmarks", landmarks},
            {"start", {start_.x, start_.y}},
            {"goal", {goal_.x, goal_.y}},
            {"detection_range", detection_range_},
            {"slip_prob", slip_prob_}};
}

GridWorld GridWorld::from_json(const nlohmann::json& doc) {
    std::set<Cell> obstacles;
    for (const auto& jc : doc.at("obstacles")) {
        obstacles.insert({jc.at(0).get<int>(), jc.at(1).get<int>()});
    }
    std::vector<Landmark> landmarks;
    for (const auto& jl : doc.at("landmarks")) {
        landmarks.push_back(Landmark{
            .id = jl.at("id").get<int>(),
            .position = {jl.at("x").get<double>(), jl.at("y").get<double>()},
            .feature = jl.at("feature").get<Descriptor>(),
            .visits = 0});
    }
    return GridWorld(doc.at("width").get<int>(), doc.at("height").get<int>(),
                     std::move(obstacles), std::move(landmarks),
                     {doc.at("start").at(0).get<int>(), doc.at("start").at(1).get<int>()},
                     {doc.at("goal").at(0).get<int>(), doc.at("goal").at(1).get<int>()},
                     doc.at("detection_range").get<double>(),
                     doc.at("slip_prob").get<double>());
}

}  // namespace toponav
