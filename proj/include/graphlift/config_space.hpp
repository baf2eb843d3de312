#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "graphlift/graphmap.hpp"

namespace graphlift {

using ConfigVertexId = std::int32_t;

struct ConfigLimits {
    int max_arity = 3;                       // raisable to 5, never beyond
    std::int64_t max_vertices = 2'000'000;   // tuple-count guard
};

struct ConfigEdge {
    ConfigVertexId u = -1;
    ConfigVertexId w = -1;
    std::vector<EdgeId> edge_tuple; // one G-edge per coordinate, shared image
};

// The ordered configuration multigraph of n points: vertices are n-tuples of
// pairwise-distinct G-vertices with a common image, edges are n-tuples of
// pairwise vertex-disjoint G-edges with a common image joining the tuples
// coordinatewise.
class ConfigGraph {
public:
    ConfigGraph() = default;
    ConfigGraph(int arity, std::vector<std::int32_t> flat_tuples, std::vector<ConfigEdge> edges);

    int arity() const { return arity_; }
    std::int32_t vertex_count() const {
        return arity_ == 0 ? 0 : static_cast<std::int32_t>(flat_tuples_.size() / arity_);
    }
    std::span<const std::int32_t> tuple(ConfigVertexId v) const {
        return {flat_tuples_.data() + static_cast<std::size_t>(v) * arity_,
                static_cast<std::size_t>(arity_)};
    }
    const std::vector<ConfigEdge>& edges() const { return edges_; }
    const std::vector<std::vector<std::int32_t>>& adjacency() const { return adjacency_; }

    // -1 when no such tuple exists.
    ConfigVertexId find_tuple(std::span<const VertexId> t) const;

    // Lexicographic comparison of member tuples (canonical vertex indices).
    bool tuple_less(ConfigVertexId a, ConfigVertexId b) const;

private:
    int arity_ = 0;
    std::vector<std::int32_t> flat_tuples_;
    std::vector<ConfigEdge> edges_;
    std::vector<std::vector<std::int32_t>> adjacency_; // vertex -> incident edge idx
    std::unordered_map<std::uint64_t, std::vector<ConfigVertexId>> lookup_;
};

struct ComponentMap {
    std::vector<std::int32_t> comp_of;          // vertex -> component id
    std::int32_t count = 0;
    std::vector<ConfigVertexId> least_vertex;   // component -> lex-least member
    std::vector<std::int64_t> sizes;
};

struct ActionResult {
    std::vector<ConfigVertexId> vertex_image;
    std::vector<std::int32_t> component_image;
};

// A path in the configuration graph from a tuple to its right cyclic shift.
struct ObstructorWitness {
    int arity = 0;
    std::vector<std::vector<VertexId>> path; // G-vertex tuples, consecutive ones adjacent
};

// Throws std::invalid_argument when n is outside [2, limits.max_arity] and
// resource_limit_error when the tuple-count estimate exceeds the guard.
ConfigGraph build_config(const GraphMap& m, int n, const ConfigLimits& limits = {});

// Exact tuple-count prediction (the falling-factorial fiber sum).
std::int64_t config_vertex_estimate(const GraphMap& m, int n);

// Connected components with identifiers ordered by lex-least member tuple.
ComponentMap components(const ConfigGraph& c);

// Coordinate permutation action. sigma is a permutation p of {0..n-1}; the
// image tuple u of t satisfies u[p[j]] = t[j]. Returns the vertex permutation
// and the induced permutation of components.
ActionResult act(const ConfigGraph& c, const ComponentMap& cm, std::span<const int> sigma);

// Right cyclic shift image of a config vertex, -1 if absent (never for a
// well-formed graph).
ConfigVertexId shift_image(const ConfigGraph& c, ConfigVertexId v);

std::optional<ObstructorWitness> find_obstructor(const GraphMap& m, int n,
                                                 const ConfigLimits& limits = {});

// Search within an already-built configuration graph.
std::optional<ObstructorWitness> find_obstructor_in(const ConfigGraph& c, const ComponentMap& cm);

// True when the symmetric group acts freely on the components, i.e. the
// quotient covering is trivial. For n = 2 this coincides with the absence of
// 2-obstructors.
bool p_trivial(const GraphMap& m, int n, const ConfigLimits& limits = {});
bool p_trivial_in(const ConfigGraph& c, const ComponentMap& cm);

// Structural replay of a witness against the map: endpoints are cyclic
// shifts of each other and consecutive tuples are adjacent in the
// configuration graph.
bool witness_valid(const GraphMap& m, const ObstructorWitness& w,
                   const ConfigLimits& limits = {});

} // namespace graphlift
