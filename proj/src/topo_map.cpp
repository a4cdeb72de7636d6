#include "toponav/topo_map.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace toponav {

TopoMap::TopoMap(double tau_sim, int feature_dim)
    : tau_sim_(tau_sim), feature_dim_(feature_dim) {
    if (tau_sim <= 0.0 || tau_sim > 1.0) {
        throw std::invalid_argument("tau_sim must be in (0, 1]");
    }
    if (feature_dim < 1) {
        throw std::invalid_argument("feature_dim must be >= 1");
    }
}

void TopoMap::check_node(int id) const {
    if (!has_node(id)) {
        throw std::invalid_argument("unknown node id " + std::to_string(id));
    }
}

const TopoNode& TopoMap::node(int id) const {
    check_node(id);
    return nodes_[static_cast<std::size_t>(id)];
}

MatchResult TopoMap::match_or_insert(const Descriptor& feature, Vec2 position) {
    if (static_cast<int>(feature.size()) != feature_dim_) {
        throw std::invalid_argument("feature dimension does not match map");
    }
    // Best match wins; strict > keeps the lowest id on similarity ties.
    int best_id = -1;
    double best_sim = 0.0;
    for (const TopoNode& n : nodes_) {
        const double sim = descriptor_similarity(feature, n.feature);
        if (sim > best_sim) {
            best_sim = sim;
            best_id = n.id;
        }
    }
    if (best_id >= 0 && best_sim >= tau_sim_) {
        nodes_[static_cast<std::size_t>(best_id)].visits += 1;
        return {best_id, false};
    }
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(TopoNode{.id = id,
                              .position = position,
                              .feature = feature,
                              .visits = 0,
                              .explored = false});
    adjacency_.emplace_back();
    return {id, true};
}

const TopoEdge& TopoMap::add_edge(int a, int b) {
    check_node(a);
    check_node(b);
    if (a == b) {
        throw std::invalid_argument("self-edge on node " + std::to_string(a));
    }
    const auto key = std::minmax(a, b);
    if (auto it = edge_index_.find(key); it != edge_index_.end()) {
        return edges_[it->second];
    }
    const std::size_t idx = edges_.size();
    edges_.push_back(TopoEdge{.a = key.first,
                              .b = key.second,
                              .cost = distance(node(a).position, node(b).position),
                              .traversable = true});
    edge_index_.emplace(key, idx);
    adjacency_[static_cast<std::size_t>(a)].push_back(idx);
    adjacency_[static_cast<std::size_t>(b)].push_back(idx);
    return edges_[idx];
}

std::optional<std::vector<int>> TopoMap::shortest_path(int a, int b) const {
    check_node(a);
    check_node(b);

    // Label-setting search on (cost, node-id sequence); the lexicographic
    // path component settles equal-cost ties deterministically.
    struct Label {
        double cost;
        std::vector<int> path;
        bool operator>(const Label& o) const {
            if (cost != o.cost) return cost > o.cost;
            return o.path < path;
        }
    };
    std::priority_queue<Label, std::vector<Label>, std::greater<>> open;
    std::vector<bool> settled(nodes_.size(), false);
    open.push({0.0, {a}});
    while (!open.empty()) {
        Label cur = open.top();
        open.pop();
        const int u = cur.path.back();
        if (settled[static_cast<std::size_t>(u)]) continue;
        settled[static_cast<std::size_t>(u)] = true;
        if (u == b) return cur.path;
        for (std::size_t ei : adjacency_[static_cast<std::size_t>(u)]) {
            const TopoEdge& e = edges_[ei];
            if (!e.traversable) continue;
            const int v = (e.a == u) ? e.b : e.a;
            if (settled[static_cast<std::size_t>(v)]) continue;
            Label next{cur.cost + e.cost, cur.path};
            next.path.push_back(v);
            open.push(std::move(next));
        }
    }
    return std::nullopt;
}

double TopoMap::path_cost(const std::vector<int>& path) const {
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto key = std::minmax(path[i - 1], path[i]);
        auto it = edge_index_.find(key);
        if (it == edge_index_.end()) {
            throw std::invalid_argument("path uses a nonexistent edge");
        }
        total += edges_[it->second].cost;
    }
    return total;
}

std::vector<int> TopoMap::frontier_nodes() const {
    std::vector<int> result;
    for (const TopoNode& n : nodes_) {
        if (!n.explored) {
            result.push_back(n.id);
            continue;
        }
        for (std::size_t ei : adjacency_[static_cast<std::size_t>(n.id)]) {
            const TopoEdge& e = edges_[ei];
            if (!e.traversable) continue;
            const int v = (e.a == n.id) ? e.b : e.a;
            if (!nodes_[static_cast<std::size_t>(v)].explored) {
                result.push_back(n.id);
                break;
            }
        }
    }
    return result;
}

void TopoMap::mark_explored(int id) {
    check_node(id);
    nodes_[static_cast<std::size_t>(id)].explored = true;
}

void TopoMap::increment_visits(int id) {
    check_node(id);
    nodes_[static_cast<std::size_t>(id)].visits += 1;
}

std::vector<int> TopoMap::node_ids_at(Cell cell) const {
    std::vector<int> out;
    for (const TopoNode& n : nodes_) {
        if (static_cast<int>(std::lround(n.position.x)) == cell.x &&
            static_cast<int>(std::lround(n.position.y)) == cell.y) {
            out.push_back(n.id);
        }
    }
    return out;
}

nlohmann::json TopoMap::to_json() const {
    nlohmann::json nodes = nlohmann::json::array();
    for (const TopoNode& n : nodes_) {
        nodes.push_back({{"id", n.id},
                         {"x", n.position.x},
                         {"y", n.position.y},
                         {"feature", n.feature},
                         {"visits", n.visits},
                         {"explored", n.explored}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const TopoEdge& e : edges_) {
        edges.push_back({{"a", e.a},
                         {"b", e.b},
                         {"cost", e.cost},
                         {"traversable", e.traversable}});
    }
    return {{"tau_sim", tau_sim_},
            {"feature_dim", feature_dim_},
            {"nodes", nodes},
            {"edges", edges}};
}

TopoMap TopoMap::from_json(const nlohmann::json& doc) {
    TopoMap map(doc.at("tau_sim").get<double>(), doc.at("feature_dim").get<int>());
    for (const auto& jn : doc.at("nodes")) {
        TopoNode n{.id = jn.at("id").get<int>(),
                   .position = {jn.at("x").get<double>(), jn.at("y").get<double>()},
                   .feature = jn.at("feature").get<Descriptor>(),
                   .visits = jn.at("visits").get<int>(),
                   .explored = jn.at("explored").get<bool>()};
        if (n.id != static_cast<int>(map.nodes_.size())) {
            throw std::invalid_argument("node ids must be dense and ordered");
        }
        map.nodes_.push_back(std::move(n));
        map.adjacency_.emplace_back();
    }
    for (const auto& je : doc.at("edges")) {
        const TopoEdge& e = map.add_edge(je.at("a").get<int>(), je.at("b").get<int>());
        // Cost is recomputed from positions; stored value must agree.
        (void)e;
        map.edges_.back().traversable = je.at("traversable").get<bool>();
    }
    return map;
}

}  // namespace toponav
