#include "graphlift/multigraph.hpp"

#include "graphlift/errors.hpp"

namespace graphlift {

VertexId MultiGraph::add_vertex(std::string name) {
    auto [it, inserted] = vertex_index_.try_emplace(name, vertex_count());
    if (!inserted) throw validation_error("duplicate vertex identifier: " + name);
    vertex_names_.push_back(std::move(name));
    degree_.push_back(0);
    incident_.emplace_back();
    return it->second;
}

EdgeId MultiGraph::add_edge(std::string name, VertexId u, VertexId v) {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw validation_error("edge endpoint out of range for edge: " + name);
    auto [it, inserted] = edge_index_.try_emplace(name, edge_count());
    if (!inserted) throw validation_error("duplicate edge identifier: " + name);
    EdgeId id = it->second;
    edge_names_.push_back(std::move(name));
    edge_ends_.emplace_back(u, v);
    degree_[u] += (u == v) ? 2 : 1;
    if (u != v) degree_[v] += 1;
    incident_[u].push_back(id);
    if (u != v) incident_[v].push_back(id);
    return id;
}

EdgeId MultiGraph::add_edge(std::string name, std::string_view u, std::string_view v) {
    VertexId ui = find_vertex(u);
    VertexId vi = find_vertex(v);
    if (ui < 0) throw validation_error("unknown vertex identifier: " + std::string(u));
    if (vi < 0) throw validation_error("unknown vertex identifier: " + std::string(v));
    return add_edge(std::move(name), ui, vi);
}

VertexId MultiGraph::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    return it == vertex_index_.end() ? -1 : it->second;
}

EdgeId MultiGraph::find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    return it == edge_index_.end() ? -1 : it->second;
}

bool is_tree(const MultiGraph& g) {
    const auto n = g.vertex_count();
    if (n == 0) return false;
    if (g.edge_count() != n - 1) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return false;
    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::int32_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident_edges(v)) {
            auto [a, b] = g.edge_ends(e);
            VertexId w = (a == v) ? b : a;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_path(const MultiGraph& g) {
    if (!is_tree(g)) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

} // namespace graphlift
