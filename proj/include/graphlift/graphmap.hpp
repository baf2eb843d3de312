#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphlift/multigraph.hpp"

namespace graphlift {

// A multigraph homomorphism f: G -> H. Edges map to edges, so non-degeneracy
// is built into the representation.
struct GraphMap {
    MultiGraph domain;              // G
    MultiGraph codomain;            // H
    std::vector<VertexId> vmap;     // V(G) -> V(H)
    std::vector<EdgeId> emap;       // E(G) -> E(H)
};

// Preimages of codomain vertices and edges, each list in canonical order.
struct FiberIndex {
    std::vector<std::vector<VertexId>> vertex_fibers; // indexed by H-vertex
    std::vector<std::vector<EdgeId>> edge_fibers;     // indexed by H-edge
};

struct StabilityResult {
    bool stable = false;
    std::optional<VertexId> witness; // violating H-vertex, canonical-first
};

// GMAP v1 reader. Returns a validated map; throws parse_error or
// validation_error.
GraphMap parse_gmap(std::istream& in);
GraphMap parse_gmap(const std::string& text);

// Canonical GMAP v1 form; parse(serialize(m)) reproduces m exactly.
std::string serialize_gmap(const GraphMap& m);

// Checks the homomorphism condition on every edge; throws validation_error
// naming the first offending edge.
void validate(const GraphMap& m);

FiberIndex fibers(const GraphMap& m);

// Restriction of f to the closure of its multiple-point set: edges whose image
// edge fiber has size >= 2, their endpoints, and vertices whose image vertex
// fiber has size >= 2. The codomain is cut down to the image. Liftability is
// unchanged.
GraphMap restrict_multiple(const GraphMap& m);

// A G-vertex is regular when f is bijective on its star: equal degrees and
// pairwise-distinct incident edge images. The map is stable when fibers over
// H-vertices of degree != 2 are all-regular and fibers over degree-2 vertices
// hold at most one non-regular vertex.
StabilityResult is_stable(const GraphMap& m);

} // namespace graphlift
