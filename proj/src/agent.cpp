#include "toponav/agent.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace toponav {

int select_subgoal(const QFunction& q_meta, Cell s, const TopoMap& map,
                   double epsilon, Rng& rng) {
    const int n = static_cast<int>(map.node_count());
    if (n == 0) throw std::invalid_argument("select_subgoal on an empty map");
    if (rng.uniform() < epsilon) {
        return rng.uniform_int(0, n - 1);  // node ids are dense
    }
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    return q_meta.argmax(s, ids);
}

Action select_action(const QFunction& q_sub, Cell s, double epsilon, Rng& rng) {
    if (rng.uniform() < epsilon) {
        return static_cast<Action>(rng.uniform_int(0, kNumActions - 1));
    }
    static constexpr std::array<int, 4> kActionOrder{0, 1, 2, 3};
    return static_cast<Action>(q_sub.argmax(s, kActionOrder));
}

Cell pursuit_state(Cell s, Cell target) {
    // Cell and offset sign packed into one state; x' = 3x + sign + 1 is
    // bijective, so distinct (cell, sign) pairs never alias.
    const int sx = (target.x > s.x) - (target.x < s.x);
    const int sy = (target.y > s.y) - (target.y < s.y);
    return {3 * s.x + sx + 1, 3 * s.y + sy + 1};
}

std::string sub_key_name(const SubControllerKey& k) {
    return k.is_node ? "node:" + std::to_string(k.key) : "pursuit";
}

std::optional<SubControllerKey> sub_key_from_name(const std::string& name) {
    if (name == "pursuit") return kPursuitKey;
    if (name.rfind("node:", 0) == 0) {
        try {
            return SubControllerKey{.is_node = true, .key = std::stoi(name.substr(5))};
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

constexpr std::array<int, 4> kAllActions{0, 1, 2, 3};

// Quantized free cell on the robot->goal ray at the given distance. Shrinks
// the ray until the rounded cell is a reachable target: within dist_along of
// the robot (no immediate re-synthesis) and not an obstacle.
Cell synthesize_virtual_target(Cell s, Cell goal, double dist_along,
                               const GridWorld& world) {
    const Vec2 dir = goal.center() - s.center();
    const double len = norm(dir);
    if (len == 0.0) return s;
    for (double f = std::min(dist_along, len); f > 0.5; f -= 0.5) {
        const Vec2 p = s.center() + dir * (f / len);
        Cell c{static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y))};
        c.x = std::clamp(c.x, 0, world.width() - 1);
        c.y = std::clamp(c.y, 0, world.height() - 1);
        if (cell_distance(s, c) <= dist_along && c != s && world.free_cell(c)) {
            return c;
        }
    }
    return goal;
}

struct SubgoalRef {
    enum class Kind { GlobalGoal, Node, Virtual };
    Kind kind = Kind::GlobalGoal;
    int node_id = -1;
    Cell target{};
};

// Active node-subgoal pursuit, closed into one meta-level transition.
struct Pursuit {
    Cell start_state{};
    int node_id = -1;
    double reward = 0.0;  // discounted sum of step rewards
    int steps = 0;
};

}  // namespace

NavigationAgent::NavigationAgent(AgentMode mode, const AgentConfig& cfg,
                                 const RewardConfig& reward_cfg,
                                 const SelectionConfig& selection_cfg)
    : mode_(mode), cfg_(cfg), reward_cfg_(reward_cfg), selection_cfg_(selection_cfg) {
    if (cfg.epsilon_start < 0.0 || cfg.epsilon_start > 1.0 ||
        cfg.epsilon_end < 0.0 || cfg.epsilon_end > cfg.epsilon_start) {
        throw std::invalid_argument("epsilon schedule must satisfy 0 <= end <= start <= 1");
    }
    if (cfg.d_thresh <= 0.0) throw std::invalid_argument("d_thresh must be > 0");
    if (mode_ == AgentMode::Full) {
        meta_.emplace(cfg.learning_rate, cfg.discount);
        meta_buffer_ = std::make_unique<ReplayBuffer>(
            static_cast<std::size_t>(cfg.buffer_capacity));
    }
    if (mode_ == AgentMode::Flat) {
        flat_.emplace(cfg.learning_rate, cfg.discount,
                      std::vector<int>(kAllActions.begin(), kAllActions.end()));
        flat_buffer_ = std::make_unique<ReplayBuffer>(
            static_cast<std::size_t>(cfg.buffer_capacity));
    }
}

const QFunction& NavigationAgent::meta() const {
    if (!meta_) throw std::logic_error("agent has no meta-controller");
    return *meta_;
}

const QFunction* NavigationAgent::sub(const SubControllerKey& k) const {
    auto it = subs_.find(k);
    return it == subs_.end() ? nullptr : &it->second;
}

QFunction& NavigationAgent::sub_for(const SubControllerKey& k) {
    auto it = subs_.find(k);
    if (it == subs_.end()) {
        it = subs_.emplace(k, QFunction(cfg_.learning_rate, cfg_.discount,
                                        std::vector<int>(kAllActions.begin(),
                                                         kAllActions.end())))
                 .first;
    }
    return it->second;
}

ReplayBuffer& NavigationAgent::sub_buffer_for(const SubControllerKey& k) {
    auto it = sub_buffers_.find(k);
    if (it == sub_buffers_.end()) {
        it = sub_buffers_
                 .emplace(k, ReplayBuffer(static_cast<std::size_t>(cfg_.buffer_capacity)))
                 .first;
    }
    return it->second;
}

double NavigationAgent::epsilon() const {
    const double frac = std::min(
        1.0, static_cast<double>(global_step_) /
                 static_cast<double>(std::max(1, cfg_.epsilon_decay_steps)));
    return cfg_.epsilon_start + frac * (cfg_.epsilon_end - cfg_.epsilon_start);
}

double NavigationAgent::max_abs_q() const {
    double m = 0.0;
    if (meta_) m = std::max(m, meta_->max_abs_value());
    if (flat_) m = std::max(m, flat_->max_abs_value());
    for (const auto& [k, q] : subs_) m = std::max(m, q.max_abs_value());
    return m;
}

EpisodeResult NavigationAgent::run_episode(const GridWorld& world,
                                           MappingState& mapping, Rng& rng,
                                           const EpisodeOptions& opt) {
    if (mode_ == AgentMode::Flat) return run_flat(world, mapping, rng, opt);
    return run_hierarchical(world, mapping, rng, opt);
}

EpisodeResult NavigationAgent::run_hierarchical(const GridWorld& world,
                                                MappingState& mapping, Rng& rng,
                                                const EpisodeOptions& opt) {
    TopoMap& map = mapping.map;
    const Cell goal = world.goal();
    const bool use_map = mode_ == AgentMode::Full;

    EpisodeResult res;
    ExplorationState expl;
    expl.total_area = world.free_cell_count();

    Cell s = world.start();
    expl.state_visits[s] = 1;
    expl.explored_area = 1;

    std::optional<int> prev_node;  // last node whose cell the robot occupied
    int pending_frontier = 0;
    auto visit_nodes_at = [&](Cell c) {
        for (int nid : map.node_ids_at(c)) {
            if (!map.node(nid).explored) {
                map.mark_explored(nid);
                ++pending_frontier;
            }
            prev_node = nid;
        }
    };
    visit_nodes_at(s);
    pending_frontier = 0;  // no reward is computed for the initial placement

    auto apply_detection_noise = [&](std::vector<Landmark> v) {
        if (opt.detection_false_negative <= 0.0) return v;
        std::vector<Landmark> kept;
        for (Landmark& lm : v) {
            if (!rng.bernoulli(opt.detection_false_negative)) kept.push_back(std::move(lm));
        }
        return kept;
    };
    std::vector<Landmark> detected = apply_detection_noise(world.detect_landmarks(s));

    SubgoalRef subgoal{.kind = SubgoalRef::Kind::GlobalGoal, .node_id = -1, .target = goal};
    std::optional<Pursuit> pursuit;
    int subgoal_steps = 0;
    // Milestones pay once per subgoal per episode; repeat completions would
    // otherwise be farmable for reward.
    std::set<int> completed_nodes;

    auto record_subgoal = [&](int t) {
        if (!opt.trace) return;
        const char kind = subgoal.kind == SubgoalRef::Kind::Node     ? 'N'
                          : subgoal.kind == SubgoalRef::Kind::Virtual ? 'V'
                                                                      : 'G';
        opt.trace->push_back({t, kind, subgoal.target, subgoal.node_id});
    };
    record_subgoal(0);

    auto close_pursuit = [&](Cell s_now, bool terminal) {
        if (!pursuit) return;
        if (opt.learn) {
            meta_buffer_->push(Transition{.s = pursuit->start_state,
                                          .choice = pursuit->node_id,
                                          .reward = pursuit->reward,
                                          .s_next = s_now,
                                          .terminal = terminal});
            if (meta_buffer_->size() >= static_cast<std::size_t>(cfg_.batch_size)) {
                meta_->update_batch(
                    meta_buffer_->sample(static_cast<std::size_t>(cfg_.batch_size), rng));
            }
        }
        pursuit.reset();
    };

    auto node_cell = [&](int nid) {
        return Cell{static_cast<int>(std::lround(map.node(nid).position.x)),
                    static_cast<int>(std::lround(map.node(nid).position.y))};
    };
    // Epsilon-greedy meta choice over map nodes, excluding the node the robot
    // stands on and (after an overflow) the node that just failed.
    auto meta_select_node = [&](Cell at, int exclude_id) -> std::optional<int> {
        std::vector<int> candidates;
        for (int nid = 0; nid < static_cast<int>(map.node_count()); ++nid) {
            if (nid == exclude_id || node_cell(nid) == at) continue;
            candidates.push_back(nid);
        }
        if (candidates.empty()) return std::nullopt;
        const double meta_eps = opt.learn ? epsilon() : 0.0;
        if (rng.uniform() < meta_eps) {
            return candidates[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<int>(candidates.size()) - 1))];
        }
        return meta_->argmax(at, candidates);
    };
    auto start_node_pursuit = [&](int nid, Cell at, int t) {
        subgoal = {.kind = SubgoalRef::Kind::Node,
                   .node_id = nid,
                   .target = node_cell(nid)};
        pursuit = Pursuit{.start_state = at, .node_id = nid};
        subgoal_steps = 0;
        record_subgoal(t);
    };

    for (int t = 1; t <= cfg_.max_steps_episode; ++t) {
        // --- landmark / subgoal phase (Algorithm 2 map update)
        int new_nodes = 0;
        int best_node = -1;
        if (!detected.empty()) {
            for (Landmark& lm : detected) {
                auto it = mapping.landmark_to_node.find(lm.id);
                lm.visits = it == mapping.landmark_to_node.end()
                                ? 0
                                : map.node(it->second).visits;
            }
            std::set<int> inserted_nodes;
            for (const Landmark& lm : detected) {
                const MatchResult m = map.match_or_insert(lm.feature, lm.position);
                mapping.landmark_to_node[lm.id] = m.node_id;
                if (m.inserted) {
                    ++new_nodes;
                    inserted_nodes.insert(m.node_id);
                    if (prev_node && *prev_node != m.node_id) {
                        map.add_edge(*prev_node, m.node_id);
                    }
                }
            }
            // Strategic selection over the freshly inserted landmarks: a new
            // best node takes over as the subgoal (Algorithm 2's landmark
            // branch); known landmarks are the meta-controller's business.
            std::vector<Landmark> fresh;
            for (const Landmark& lm : detected) {
                const int nid = mapping.landmark_to_node.at(lm.id);
                if (!inserted_nodes.count(nid) || node_cell(nid) == s) continue;
                fresh.push_back(lm);
            }
            if (const auto best = select_landmark(fresh, s.center(), goal.center(),
                                                  selection_cfg_)) {
                best_node = mapping.landmark_to_node.at(best->id);
            }
        }
        if (use_map && subgoal.kind == SubgoalRef::Kind::GlobalGoal &&
            cell_distance(s, goal) > cfg_.d_thresh) {
            // The goal is out of direct reach: hop toward the best detected
            // landmark; in a featureless stretch drop a waypoint on the goal
            // ray; otherwise (landmarks visible but all spent) ask the meta.
            if (best_node >= 0) {
                close_pursuit(s, false);
                start_node_pursuit(best_node, s, t);
            } else if (detected.empty()) {
                subgoal = {.kind = SubgoalRef::Kind::Virtual,
                           .node_id = -1,
                           .target = synthesize_virtual_target(s, goal, cfg_.d_thresh, world)};
                subgoal_steps = 0;
                record_subgoal(t);
            } else if (const auto nid = meta_select_node(s, -1)) {
                start_node_pursuit(*nid, s, t);
            }
        }
        visit_nodes_at(s);  // covers nodes inserted at the robot's own cell

        // --- act via the current sub-controller. Node pursuits see absolute
        // cells; virtual/global pursuits see the target-offset sign.
        const bool node_pursuit = subgoal.kind == SubgoalRef::Kind::Node;
        const SubControllerKey key =
            node_pursuit ? SubControllerKey{.is_node = true, .key = subgoal.node_id}
                         : kPursuitKey;
        const Cell q_state = node_pursuit ? s : pursuit_state(s, subgoal.target);
        const double eps = opt.learn ? epsilon() : 0.0;
        QFunction& q = sub_for(key);
        const Action a = select_action(q, q_state, eps, rng);
        const StepOutcome out = world.step(s, a, rng);
        if (opt.learn) ++global_step_;

        const Cell sn = out.next_state;
        res.steps = t;
        if (sn != s) ++res.trajectory_length;

        // --- exploration bookkeeping
        const bool new_cell = expl.state_visits.find(sn) == expl.state_visits.end();
        expl.state_visits[sn] += 1;
        expl.area_delta = new_cell ? 1 : 0;
        if (new_cell) ++expl.explored_area;
        visit_nodes_at(sn);
        expl.frontier_new = pending_frontier;
        pending_frontier = 0;
        expl.node_total = static_cast<int>(map.node_count());
        if (expl.area_delta > 0 || new_nodes > 0) expl.t_last_exp = t;

        StepEvents ev = out.events;
        // Subgoals count as reached within one cell; exact-cell attainment is
        // needlessly brittle under slip and quantized waypoints.
        const bool reached_subgoal =
            subgoal.kind == SubgoalRef::Kind::GlobalGoal
                ? sn == subgoal.target
                : cell_distance(sn, subgoal.target) <= 1.0;
        // Milestones are completions of map-node subgoals, paid once per node
        // per episode (repeat completions would be farmable).
        ev.reached_milestone = reached_subgoal &&
                               subgoal.kind == SubgoalRef::Kind::Node &&
                               completed_nodes.insert(subgoal.node_id).second;
        ev.new_subgoal_discovered = new_nodes > 0;
        ev.uncertainty = 1.0 / (1.0 + expl.state_visits[sn]);
        if (reached_subgoal && subgoal.kind == SubgoalRef::Kind::Node) {
            map.increment_visits(subgoal.node_id);
        }

        // --- composite reward
        const std::optional<Descriptor> sg_feature =
            subgoal.kind == SubgoalRef::Kind::Node
                ? std::optional<Descriptor>(map.node(subgoal.node_id).feature)
                : std::nullopt;
        const RewardBreakdown b =
            total_reward(sn, sg_feature, t, ev, expl, reward_cfg_);
        res.totals.r_ex += reward_cfg_.alpha * b.r_ex;
        res.totals.r_in += reward_cfg_.beta * b.r_in;
        res.totals.r_sg += reward_cfg_.beta * b.r_sg;
        res.totals.r_fe += reward_cfg_.beta * b.r_fe;
        res.totals.r_ep += reward_cfg_.beta * b.r_ep;
        res.totals.r_ue += reward_cfg_.beta * b.r_ue;
        res.totals.r_p += reward_cfg_.gamma_pen * b.r_p;
        res.totals.r_sd += reward_cfg_.gamma_pen * b.r_sd;
        res.totals.r_te += reward_cfg_.gamma_pen * b.r_te;
        res.totals.r_ob += reward_cfg_.gamma_pen * b.r_ob;
        res.totals.total += b.total;
        max_abs_reward_ = std::max(max_abs_reward_, std::abs(b.total));

        // --- store and learn, sub level. Sub-controllers optimize reaching
        // their target safely: extrinsic attainment plus the penalty stream.
        // The positive exploration-value terms of the composite belong to the
        // meta level, which chooses where to go.
        const double sub_reward = reward_cfg_.alpha * b.extrinsic_sum() +
                                  reward_cfg_.gamma_pen * b.penalty_sum();
        const bool sub_terminal = ev.reached_goal || reached_subgoal;
        if (opt.learn) {
            const Cell q_state_next =
                node_pursuit ? sn : pursuit_state(sn, subgoal.target);
            ReplayBuffer& buf = sub_buffer_for(key);
            buf.push(Transition{.s = q_state,
                                .choice = static_cast<int>(a),
                                .reward = sub_reward,
                                .s_next = q_state_next,
                                .terminal = sub_terminal});
            if (buf.size() >= static_cast<std::size_t>(cfg_.batch_size)) {
                q.update_batch(buf.sample(static_cast<std::size_t>(cfg_.batch_size), rng));
            }
        }

        // --- meta level accounting over the active pursuit
        if (pursuit) {
            const double r_meta = cfg_.meta_reward_extrinsic_only
                                      ? reward_cfg_.alpha * b.r_ex
                                      : b.total;
            pursuit->reward += std::pow(cfg_.discount, pursuit->steps) * r_meta;
            pursuit->steps += 1;
        }
        ++subgoal_steps;

        if (ev.reached_goal) {
            res.success = true;
            close_pursuit(sn, true);
            s = sn;
            break;
        }

        if (reached_subgoal) {
            if (subgoal.kind == SubgoalRef::Kind::Node) {
                close_pursuit(sn, false);
                expl.subgoal_history.push_back(map.node(subgoal.node_id).feature);
            }
            subgoal = {.kind = SubgoalRef::Kind::GlobalGoal, .node_id = -1, .target = goal};
            subgoal_steps = 0;
            record_subgoal(t);
        } else if (use_map && subgoal_steps >= cfg_.max_steps_subgoal) {
            // Overflowed pursuit: the meta-controller picks a fresh subgoal,
            // a different one than the node that just failed.
            const int failed_node =
                subgoal.kind == SubgoalRef::Kind::Node ? subgoal.node_id : -1;
            close_pursuit(sn, false);
            if (const auto nid = meta_select_node(sn, failed_node)) {
                start_node_pursuit(*nid, sn, t);
            } else {
                subgoal = {.kind = SubgoalRef::Kind::GlobalGoal, .node_id = -1, .target = goal};
                subgoal_steps = 0;
                record_subgoal(t);
            }
        } else if (!use_map && subgoal_steps >= cfg_.max_steps_subgoal) {
            subgoal_steps = 0;
        }

        s = sn;
        detected = apply_detection_noise(out.detected);
    }

    if (pursuit) close_pursuit(s, false);
    res.coverage = static_cast<double>(expl.explored_area) /
                   static_cast<double>(expl.total_area);
    res.map_nodes = static_cast<int>(map.node_count());
    res.map_edges = static_cast<int>(map.edge_count());
    return res;
}

EpisodeResult NavigationAgent::run_flat(const GridWorld& world,
                                        MappingState& mapping, Rng& rng,
                                        const EpisodeOptions& opt) {
    TopoMap& map = mapping.map;
    EpisodeResult res;
    ExplorationState expl;
    expl.total_area = world.free_cell_count();

    Cell s = world.start();
    expl.state_visits[s] = 1;
    expl.explored_area = 1;

    std::optional<int> prev_node;
    int pending_frontier = 0;
    auto visit_nodes_at = [&](Cell c) {
        for (int nid : map.node_ids_at(c)) {
            if (!map.node(nid).explored) {
                map.mark_explored(nid);
                ++pending_frontier;
            }
            prev_node = nid;
        }
    };
    visit_nodes_at(s);
    pending_frontier = 0;

    std::vector<Landmark> detected = world.detect_landmarks(s);

    for (int t = 1; t <= cfg_.max_steps_episode; ++t) {
        // The map is still built (rewards stay comparable); it just never
        // drives behavior.
        int new_nodes = 0;
        for (const Landmark& lm : detected) {
            const MatchResult m = map.match_or_insert(lm.feature, lm.position);
            mapping.landmark_to_node[lm.id] = m.node_id;
            if (m.inserted) {
                ++new_nodes;
                if (prev_node && *prev_node != m.node_id) {
                    map.add_edge(*prev_node, m.node_id);
                }
            }
        }
        visit_nodes_at(s);

        const double eps = opt.learn ? epsilon() : 0.0;
        const Action a = select_action(*flat_, s, eps, rng);
        const StepOutcome out = world.step(s, a, rng);
        if (opt.learn) ++global_step_;

        const Cell sn = out.next_state;
        res.steps = t;
        if (sn != s) ++res.trajectory_length;

        const bool new_cell = expl.state_visits.find(sn) == expl.state_visits.end();
        expl.state_visits[sn] += 1;
        expl.area_delta = new_cell ? 1 : 0;
        if (new_cell) ++expl.explored_area;
        visit_nodes_at(sn);
        expl.frontier_new = pending_frontier;
        pending_frontier = 0;
        expl.node_total = static_cast<int>(map.node_count());
        if (expl.area_delta > 0 || new_nodes > 0) expl.t_last_exp = t;

        StepEvents ev = out.events;
        ev.new_subgoal_discovered = new_nodes > 0;
        ev.uncertainty = 1.0 / (1.0 + expl.state_visits[sn]);

        const RewardBreakdown b = total_reward(sn, std::nullopt, t, ev, expl, reward_cfg_);
        res.totals.r_ex += reward_cfg_.alpha * b.r_ex;
        res.totals.r_in += reward_cfg_.beta * b.r_in;
        res.totals.r_sg += reward_cfg_.beta * b.r_sg;
        res.totals.r_fe += reward_cfg_.beta * b.r_fe;
        res.totals.r_ep += reward_cfg_.beta * b.r_ep;
        res.totals.r_ue += reward_cfg_.beta * b.r_ue;
        res.totals.r_p += reward_cfg_.gamma_pen * b.r_p;
        res.totals.r_sd += reward_cfg_.gamma_pen * b.r_sd;
        res.totals.r_te += reward_cfg_.gamma_pen * b.r_te;
        res.totals.r_ob += reward_cfg_.gamma_pen * b.r_ob;
        res.totals.total += b.total;
        max_abs_reward_ = std::max(max_abs_reward_, std::abs(b.total));

        if (opt.learn) {
            flat_buffer_->push(Transition{.s = s,
                                          .choice = static_cast<int>(a),
                                          .reward = b.total,
                                          .s_next = sn,
                                          .terminal = ev.reached_goal});
            if (flat_buffer_->size() >= static_cast<std::size_t>(cfg_.batch_size)) {
                flat_->update_batch(
                    flat_buffer_->sample(static_cast<std::size_t>(cfg_.batch_size), rng));
            }
        }

        if (ev.reached_goal) {
            res.success = true;
            s = sn;
            break;
        }
        s = sn;
        detected = out.detected;
    }

    res.coverage = static_cast<double>(expl.explored_area) /
                   static_cast<double>(expl.total_area);
    res.map_nodes = static_cast<int>(map.node_count());
    res.map_edges = static_cast<int>(map.edge_count());
    return res;
}

namespace {

nlohmann::json entries_to_json(const QFunction& q) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : q.entries()) {
        arr.push_back({{"state", {e.s.x, e.s.y}},
                       {"choice", e.choice},
                       {"value", e.value}});
    }
    return arr;
}

void entries_from_json(QFunction& q, const nlohmann::json& arr) {
    for (const auto& je : arr) {
        q.set({je.at("state").at(0).get<int>(), je.at("state").at(1).get<int>()},
              je.at("choice").get<int>(), je.at("value").get<double>());
    }
}

std::string mode_name(AgentMode m) {
    switch (m) {
        case AgentMode::Full: return "full";
        case AgentMode::NoTopoMap: return "no_topo_map";
        case AgentMode::Flat: return "flat";
    }
    return "full";
}

}  // namespace

nlohmann::json NavigationAgent::snapshot() const {
    nlohmann::json levels = nlohmann::json::array();
    if (meta_) {
        levels.push_back({{"level", "meta"}, {"entries", entries_to_json(*meta_)}});
    }
    for (const auto& [k, q] : subs_) {
        levels.push_back(
            {{"level", "sub/" + sub_key_name(k)}, {"entries", entries_to_json(q)}});
    }
    if (flat_) {
        levels.push_back({{"level", "flat"}, {"entries", entries_to_json(*flat_)}});
    }
    return {{"mode", mode_name(mode_)},
            {"global_step", global_step_},
            {"levels", levels}};
}

void NavigationAgent::load_snapshot(const nlohmann::json& doc) {
    if (doc.at("mode").get<std::string>() != mode_name(mode_)) {
        throw std::invalid_argument("snapshot mode does not match agent mode");
    }
    global_step_ = doc.at("global_step").get<long long>();
    subs_.clear();
    sub_buffers_.clear();
    for (const auto& jl : doc.at("levels")) {
        const std::string level = jl.at("level").get<std::string>();
        if (level == "meta") {
            if (!meta_) throw std::invalid_argument("meta level in a non-hierarchical snapshot");
            meta_.emplace(cfg_.learning_rate, cfg_.discount);
            entries_from_json(*meta_, jl.at("entries"));
        } else if (level == "flat") {
            if (!flat_) throw std::invalid_argument("flat level in a hierarchical snapshot");
            flat_.emplace(cfg_.learning_rate, cfg_.discount,
                          std::vector<int>(kAllActions.begin(), kAllActions.end()));
            entries_from_json(*flat_, jl.at("entries"));
        } else if (level.rfind("sub/", 0) == 0) {
            const auto key = sub_key_from_name(level.substr(4));
            if (!key) throw std::invalid_argument("bad sub-controller level: " + level);
            entries_from_json(sub_for(*key), jl.at("entries"));
        } else {
            throw std::invalid_argument("unknown snapshot level: " + level);
        }
    }
}

}  // namespace toponav
