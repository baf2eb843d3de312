#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphlift/gamma.hpp"
#include "graphlift/graphmap.hpp"

namespace graphlift {

// Per-fiber strict total orders: for each H-vertex, its fiber listed in
// ascending order.
struct OrderCollection {
    std::vector<std::vector<VertexId>> fiber_order;
};

// Integer heights, one per G-vertex; within each fiber the heights are exactly
// the ranks 1..|fiber|.
struct Lifting {
    std::vector<std::int32_t> heights;
};

struct AdmissibleCheck {
    bool ok = false;
    std::optional<std::pair<EdgeId, EdgeId>> violation;
};

struct EmbeddingCheck {
    bool ok = false;
    std::optional<std::pair<EdgeId, EdgeId>> witness;
};

struct BruteForceResult {
    std::uint64_t count = 0;
    std::vector<OrderCollection> collections; // canonical order, capped
    bool truncated = false;
};

// Orders each fiber by the satisfied literals of the pair components: x comes
// before y when the component holding (x, y) is true under the assignment.
// Throws std::logic_error if the induced relation is not a strict total order
// per fiber (never for a model of the formula).
OrderCollection assignment_to_orders(const GraphMap& m, const GammaFormula& g,
                                     const Assignment& a);

// A collection is admissible when no pair of distinct same-image edges sees
// both strict comparison directions across its paired endpoints, and not all
// comparisons are ties.
AdmissibleCheck is_admissible(const GraphMap& m, const OrderCollection& o);

// Dense ranks from an admissible collection; throws std::invalid_argument on
// inadmissible input.
Lifting orders_to_lifting(const GraphMap& m, const OrderCollection& o);

// Per-fiber order by height. Heights must be per-fiber rank bijections.
OrderCollection lifting_to_orders(const GraphMap& m, const Lifting& l);

// Independent check that the map crossed with the heights is an embedding:
// same-image edge pairs must not cross (opposite-sign height differences) or
// coincide (all differences zero).
EmbeddingCheck verify_embedding(const GraphMap& m, const Lifting& l);

// Enumerates every collection of per-fiber linear orders and counts the
// admissible ones. The product of fiber factorials must not exceed perm_bound
// (resource_limit_error otherwise). The collection list is normalized to
// lexicographic order over per-fiber permutations and truncated at list_cap.
BruteForceResult brute_force_liftings(const GraphMap& m, std::size_t list_cap,
                                      double perm_bound = 1e6);

// `order <h-vertex> <v1> <v2> ...` lines in canonical order.
std::string serialize_orders(const GraphMap& m, const OrderCollection& o);

} // namespace graphlift
