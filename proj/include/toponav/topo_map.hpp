#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toponav/descriptor.hpp"
#include "toponav/geometry.hpp"

#include <nlohmann/json_fwd.hpp>

namespace toponav {

struct TopoNode {
    int id = 0;
    Vec2 position;
    Descriptor feature;
    int visits = 0;
    bool explored = false;
};

struct TopoEdge {
    int a = 0;
    int b = 0;
    double cost = 0.0;
    bool traversable = true;
};

struct MatchResult {
    int node_id = 0;
    bool inserted = false;
};

// Dynamically constructed topological map. Node insertion is gated by
// descriptor similarity: a feature matching an existing node (similarity >=
// tau_sim) reuses that node, anything else becomes a new node. The gate keeps
// every distinct node pair pairwise dissimilar.
class TopoMap {
  public:
    TopoMap(double tau_sim, int feature_dim);

    // Matches `feature` against existing nodes; on a match (best similarity >=
    // tau_sim, ties to the lowest id) increments that node's visits, otherwise
    // inserts a new unexplored node at `position` with visits = 0.
    MatchResult match_or_insert(const Descriptor& feature, Vec2 position);

    // Undirected edge with cost = Euclidean distance between the endpoint
    // positions. Re-adding an existing edge changes nothing.
    const TopoEdge& add_edge(int a, int b);

    // Minimum-cost path over traversable edges, or nullopt if disconnected.
    // Ties broken toward the lexicographically smaller node-id sequence.
    std::optional<std::vector<int>> shortest_path(int a, int b) const;

    // Total traversable cost of a path returned by shortest_path.
    double path_cost(const std::vector<int>& path) const;

    // Unexplored nodes plus explored nodes adjacent to an unexplored one.
    std::vector<int> frontier_nodes() const;

    bool has_node(int id) const { return id >= 0 && id < static_cast<int>(nodes_.size()); }
    const TopoNode& node(int id) const;
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<TopoNode>& nodes() const { return nodes_; }
    const std::vector<TopoEdge>& edges() const { return edges_; }

    void mark_explored(int id);
    void increment_visits(int id);

    // Node ids whose position rounds to the given cell.
    std::vector<int> node_ids_at(Cell cell) const;

    double tau_sim() const { return tau_sim_; }
    int feature_dim() const { return feature_dim_; }

    nlohmann::json to_json() const;
    static TopoMap from_json(const nlohmann::json& doc);

  private:
    double tau_sim_;
    int feature_dim_;
    std::vector<TopoNode> nodes_;  // id == index; ids never reused
    std::vector<TopoEdge> edges_;
    std::map<std::pair<int, int>, std::size_t> edge_index_;    // (min,max) -> edge idx
    std::vector<std::vector<std::size_t>> adjacency_;          // node id -> edge idxs

    void check_node(int id) const;
};

}  // namespace toponav
