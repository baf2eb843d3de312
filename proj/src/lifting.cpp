#include "graphlift/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graphlift/errors.hpp"

namespace graphlift {

namespace {

// Comparison signs over the image-matched endpoint pairs of two same-image
// edges. cmp(x, y) is evaluated only on same-fiber vertices.
template <typename Cmp>
bool edge_pair_admissible(const GraphMap& m, EdgeId e, EdgeId g, Cmp&& cmp) {
    auto ends_of = [&](EdgeId id, std::array<VertexId, 2>& out) {
        auto [x, y] = m.domain.edge_ends(id);
        out[0] = x;
        out[1] = y;
        return (x == y) ? 1 : 2;
    };
    std::array<VertexId, 2> ee{}, ge{};
    int ne = ends_of(e, ee);
    int ng = ends_of(g, ge);
    bool has_pos = false, has_neg = false, has_nonzero = false;
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ng; ++j) {
            if (m.vmap[ee[i]] != m.vmap[ge[j]]) continue;
            int s = cmp(ee[i], ge[j]);
            if (s > 0) has_pos = true;
            if (s < 0) has_neg = true;
            if (s != 0) has_nonzero = true;
        }
    if (has_pos && has_neg) return false;
    if (!has_nonzero) return false;
    return true;
}

void check_rank_cover(const GraphMap& m, const OrderCollection& o) {
    if (static_cast<std::int32_t>(o.fiber_order.size()) != m.codomain.vertex_count())
        throw std::invalid_argument("order collection does not cover all fibers");
    const FiberIndex fi = fibers(m);
    for (VertexId w = 0; w < m.codomain.vertex_count(); ++w) {
        auto sorted = o.fiber_order[w];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != fi.vertex_fibers[w])
            throw std::invalid_argument("fiber order is not a permutation of the fiber over " +
                                        m.codomain.vertex_name(w));
    }
}

std::vector<std::int32_t> ranks_from_orders(const GraphMap& m, const OrderCollection& o) {
    std::vector<std::int32_t> rank(m.domain.vertex_count(), 0);
    for (const auto& fiber : o.fiber_order)
        for (std::size_t i = 0; i < fiber.size(); ++i)
            rank[fiber[i]] = static_cast<std::int32_t>(i);
    return rank;
}

} // namespace

OrderCollection assignment_to_orders(const GraphMap& m, const GammaFormula& g,
                                     const Assignment& a) {
    if (static_cast<int>(a.size()) != g.var_count)
        throw std::invalid_argument("assignment does not cover the variable table");

    std::array<VertexId, 2> pair{};
    auto before = [&](VertexId x, VertexId y) {
        pair = {x, y};
        ConfigVertexId v = g.config2.find_tuple(pair);
        int lit = g.comp_literal[g.comps.comp_of[v]];
        bool var_true = a[std::abs(lit) - 1] == 1;
        return (lit > 0) == var_true;
    };

    const FiberIndex fi = fibers(m);
    OrderCollection o;
    o.fiber_order.resize(m.codomain.vertex_count());
    for (VertexId w = 0; w < m.codomain.vertex_count(); ++w) {
        const auto& fiber = fi.vertex_fibers[w];
        if (fiber.size() <= 1) {
            o.fiber_order[w] = fiber;
            continue;
        }
        const std::size_t k = fiber.size();
        std::vector<std::size_t> below(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (i != j && before(fiber[j], fiber[i])) ++below[i];
        std::vector<VertexId> order(k, -1);
        std::vector<char> taken(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (below[i] >= k || taken[below[i]])
                throw std::logic_error("satisfying assignment induced a non-total fiber order");
            order[below[i]] = fiber[i];
            taken[below[i]] = 1;
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (!before(order[i], order[j]))
                    throw std::logic_error(
                        "satisfying assignment induced a non-transitive fiber order");
        o.fiber_order[w] = std::move(order);
    }
    return o;
}

AdmissibleCheck is_admissible(const GraphMap& m, const OrderCollection& o) {
    check_rank_cover(m, o);
    const std::vector<std::int32_t> rank = ranks_from_orders(m, o);
    auto cmp = [&](VertexId x, VertexId y) {
        return rank[x] < rank[y] ? -1 : (rank[x] > rank[y] ? 1 : 0);
    };
    const FiberIndex fi = fibers(m);
    for (const auto& fiber : fi.edge_fibers) {
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j)
                if (!edge_pair_admissible(m, fiber[i], fiber[j], cmp))
                    return {false, std::make_pair(fiber[i], fiber[j])};
    }
    return {true, std::nullopt};
}

Lifting orders_to_lifting(const GraphMap& m, const OrderCollection& o) {
    AdmissibleCheck check = is_admissible(m, o);
    if (!check.ok)
        throw std::invalid_argument("order collection is not admissible");
    Lifting l;
    l.heights.assign(m.domain.vertex_count(), 0);
    for (const auto& fiber : o.fiber_order)
        for (std::size_t i = 0; i < fiber.size(); ++i)
            l.heights[fiber[i]] = static_cast<std::int32_t>(i) + 1;
    return l;
}

OrderCollection lifting_to_orders(const GraphMap& m, const Lifting& l) {
    if (static_cast<std::int32_t>(l.heights.size()) != m.domain.vertex_count())
        throw std::invalid_argument("height table does not cover the domain");
    const FiberIndex fi = fibers(m);
    OrderCollection o;
    o.fiber_order.resize(m.codomain.vertex_count());
    for (VertexId w = 0; w < m.codomain.vertex_count(); ++w) {
        auto fiber = fi.vertex_fibers[w];
        std::vector<char> seen(fiber.size() + 1, 0);
        for (VertexId v : fiber) {
            std::int32_t h = l.heights[v];
            if (h < 1 || h > static_cast<std::int32_t>(fiber.size()) || seen[h])
                throw std::invalid_argument("heights are not a rank bijection over fiber " +
                                            m.codomain.vertex_name(w));
            seen[h] = 1;
        }
        std::sort(fiber.begin(), fiber.end(),
                  [&](VertexId a, VertexId b) { return l.heights[a] < l.heights[b]; });
        o.fiber_order[w] = std::move(fiber);
    }
    return o;
}

EmbeddingCheck verify_embedding(const GraphMap& m, const Lifting& l) {
    // Reject malformed height tables up front; fiber bijectivity is what makes
    // vertex disjointness automatic.
    lifting_to_orders(m, l);
    auto cmp = [&](VertexId x, VertexId y) {
        std::int32_t d = l.heights[x] - l.heights[y];
        return d < 0 ? -1 : (d > 0 ? 1 : 0);
    };
    const FiberIndex fi = fibers(m);
    for (const auto& fiber : fi.edge_fibers) {
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j)
                if (!edge_pair_admissible(m, fiber[i], fiber[j], cmp))
                    return {false, std::make_pair(fiber[i], fiber[j])};
    }
    return {true, std::nullopt};
}

BruteForceResult brute_force_liftings(const GraphMap& m, std::size_t list_cap,
                                      double perm_bound) {
    const FiberIndex fi = fibers(m);

    double product = 1.0;
    for (const auto& fiber : fi.vertex_fibers) {
        for (std::size_t i = 2; i <= fiber.size(); ++i) product *= static_cast<double>(i);
        if (product > perm_bound)
            throw resource_limit_error(
                "order-collection space exceeds the enumeration bound of " +
                std::to_string(static_cast<std::uint64_t>(perm_bound)));
    }

    // Fibers are processed largest first so that cross-fiber constraints prune
    // as early as possible; the collected list is normalized afterwards.
    std::vector<VertexId> fiber_sequence;
    for (VertexId w = 0; w < m.codomain.vertex_count(); ++w)
        if (!fi.vertex_fibers[w].empty()) fiber_sequence.push_back(w);
    std::stable_sort(fiber_sequence.begin(), fiber_sequence.end(), [&](VertexId a, VertexId b) {
        return fi.vertex_fibers[a].size() > fi.vertex_fibers[b].size();
    });
    std::vector<std::int32_t> depth_of(m.codomain.vertex_count(), -1);
    for (std::size_t d = 0; d < fiber_sequence.size(); ++d) depth_of[fiber_sequence[d]] = d;

    // H-edges become checkable once both endpoint fibers are ordered.
    std::vector<std::vector<EdgeId>> checks_at(fiber_sequence.size() + 1);
    for (EdgeId c = 0; c < m.codomain.edge_count(); ++c) {
        if (fi.edge_fibers[c].size() < 2) continue;
        auto [p, q] = m.codomain.edge_ends(c);
        std::int32_t trigger = std::max(depth_of[p], depth_of[q]);
        if (trigger >= 0) checks_at[trigger].push_back(c);
    }

    std::vector<std::int32_t> rank(m.domain.vertex_count(), 0);
    auto cmp = [&](VertexId x, VertexId y) {
        return rank[x] < rank[y] ? -1 : (rank[x] > rank[y] ? 1 : 0);
    };
    auto edge_fiber_ok = [&](EdgeId c) {
        const auto& fiber = fi.edge_fibers[c];
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j)
                if (!edge_pair_admissible(m, fiber[i], fiber[j], cmp)) return false;
        return true;
    };

    BruteForceResult result;
    const std::size_t store_cap = std::max<std::size_t>(list_cap, 1u << 20);
    std::vector<std::vector<VertexId>> perm(fiber_sequence.size());

    auto rec = [&](auto&& self, std::size_t d) -> void {
        if (d == fiber_sequence.size()) {
            ++result.count;
            if (result.collections.size() < store_cap) {
                OrderCollection o;
                o.fiber_order.resize(m.codomain.vertex_count());
                for (std::size_t i = 0; i < fiber_sequence.size(); ++i)
                    o.fiber_order[fiber_sequence[i]] = perm[i];
                result.collections.push_back(std::move(o));
            }
            return;
        }
        VertexId w = fiber_sequence[d];
        perm[d] = fi.vertex_fibers[w]; // ascending start = lexicographic first
        do {
            for (std::size_t i = 0; i < perm[d].size(); ++i)
                rank[perm[d][i]] = static_cast<std::int32_t>(i);
            bool ok = true;
            for (EdgeId c : checks_at[d])
                if (!edge_fiber_ok(c)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, d + 1);
        } while (std::next_permutation(perm[d].begin(), perm[d].end()));
    };
    rec(rec, 0);

    // Canonical output order: lexicographic over per-fiber orders taken in
    // canonical H-vertex order.
    auto flat_less = [&](const OrderCollection& a, const OrderCollection& b) {
        for (VertexId w = 0; w < m.codomain.vertex_count(); ++w) {
            const auto& fa = a.fiber_order[w];
            const auto& fb = b.fiber_order[w];
            if (fa != fb)
                return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
        }
        return false;
    };
    std::sort(result.collections.begin(), result.collections.end(), flat_less);
    if (result.collections.size() > list_cap) {
        result.collections.resize(list_cap);
        result.truncated = true;
    }
    if (result.count > result.collections.size()) result.truncated = true;
    return result;
}

std::string serialize_orders(const GraphMap& m, const OrderCollection& o) {
    std::ostringstream out;
    for (VertexId w = 0; w < m.codomain.vertex_count(); ++w) {
        if (o.fiber_order[w].empty()) continue;
        out << "order " << m.codomain.vertex_name(w);
        for (VertexId v : o.fiber_order[w]) out << " " << m.domain.vertex_name(v);
        out << "\n";
    }
    return out.str();
}

} // namespace graphlift
