#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphlift {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Finite multigraph: loops and parallel edges allowed. Vertices and edges are
// named; indices follow the order of first appearance, which is the canonical
// order used for all downstream tie-breaking.
class MultiGraph {
public:
    VertexId add_vertex(std::string name);
    EdgeId add_edge(std::string name, VertexId u, VertexId v);
    // Named variant; throws validation_error on unknown endpoint names.
    EdgeId add_edge(std::string name, std::string_view u, std::string_view v);

    std::int32_t vertex_count() const { return static_cast<std::int32_t>(vertex_names_.size()); }
    std::int32_t edge_count() const { return static_cast<std::int32_t>(edge_names_.size()); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
    std::pair<VertexId, VertexId> edge_ends(EdgeId e) const { return edge_ends_[e]; }
    bool is_loop(EdgeId e) const { return edge_ends_[e].first == edge_ends_[e].second; }

    // -1 when the name is not declared.
    VertexId find_vertex(std::string_view name) const;
    EdgeId find_edge(std::string_view name) const;

    // Loops contribute 2.
    int degree(VertexId v) const { return degree_[v]; }
    const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_[v]; }

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<std::pair<VertexId, VertexId>> edge_ends_;
    std::vector<int> degree_;
    std::vector<std::vector<EdgeId>> incident_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::unordered_map<std::string, EdgeId> edge_index_;
};

// Connected, loop-free, |E| = |V| - 1. The empty graph is not a tree.
bool is_tree(const MultiGraph& g);

// Tree with all degrees <= 2.
bool is_path(const MultiGraph& g);

} // namespace graphlift
