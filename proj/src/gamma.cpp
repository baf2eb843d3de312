#include "graphlift/gamma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "graphlift/errors.hpp"

namespace graphlift {

namespace {

// Canonical literal order: variable ascending, positive before negative.
int literal_key(int l) { return std::abs(l) * 2 + (l < 0 ? 1 : 0); }

struct ClauseLess {
    bool operator()(const Clause& a, const Clause& b) const {
        for (int i = 0; i < 3; ++i) {
            if (literal_key(a[i]) != literal_key(b[i]))
                return literal_key(a[i]) < literal_key(b[i]);
        }
        return false;
    }
};

// Exhaustive DPLL with unit propagation. Branches lowest variable first,
// value false first, which fixes the model enumeration order.
class Dpll {
public:
    Dpll(int nvars, const std::vector<Clause>& clauses, std::size_t cap)
        : nvars_(nvars), clauses_(clauses), cap_(cap), value_(nvars, -1) {}

    ModelList run() {
        search();
        return {std::move(models_), truncated_};
    }

private:
    int nvars_;
    const std::vector<Clause>& clauses_;
    std::size_t cap_;
    std::vector<std::int8_t> value_;
    std::vector<Assignment> models_;
    bool truncated_ = false;
    bool stop_ = false;

    int lit_value(int l) const {
        std::int8_t v = value_[std::abs(l) - 1];
        if (v < 0) return -1;
        return (l > 0) == (v == 1) ? 1 : 0;
    }

    // Returns false on conflict; assigned variables are appended to trail.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Clause& c : clauses_) {
                bool satisfied = false;
                int unassigned_lit = 0;
                bool mixed = false;
                int unassigned_count = 0;
                for (int l : c) {
                    int v = lit_value(l);
                    if (v == 1) {
                        satisfied = true;
                        break;
                    }
                    if (v == -1) {
                        ++unassigned_count;
                        if (unassigned_lit == 0)
                            unassigned_lit = l;
                        else if (unassigned_lit != l)
                            mixed = true;
                    }
                }
                if (satisfied) continue;
                if (unassigned_count == 0) return false;
                if (!mixed) {
                    int var = std::abs(unassigned_lit) - 1;
                    value_[var] = unassigned_lit > 0 ? 1 : 0;
                    trail.push_back(var);
                    changed = true;
                }
            }
        }
        return true;
    }

    void record_model() {
        if (models_.size() == cap_) {
            truncated_ = true;
            stop_ = true;
            return;
        }
        Assignment a(nvars_);
        for (int i = 0; i < nvars_; ++i) a[i] = static_cast<std::uint8_t>(value_[i]);
        models_.push_back(std::move(a));
    }

    void search() {
        if (stop_) return;
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) value_[v] = -1;
            return;
        }
        int branch = -1;
        for (int i = 0; i < nvars_; ++i)
            if (value_[i] < 0) {
                branch = i;
                break;
            }
        if (branch < 0) {
            record_model();
        } else {
            for (std::int8_t val : {std::int8_t{0}, std::int8_t{1}}) {
                value_[branch] = val;
                search();
                value_[branch] = -1;
                if (stop_) break;
            }
        }
        for (int v : trail) value_[v] = -1;
    }
};

struct UnionFind {
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> least; // min component id per class

    explicit UnionFind(std::int32_t n) : parent(n), least(n) {
        std::iota(parent.begin(), parent.end(), 0);
        std::iota(least.begin(), least.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Merges the class of `from` into the class of `into`.
    void unite(std::int32_t from, std::int32_t into) {
        std::int32_t rf = find(from), ri = find(into);
        if (rf == ri) return;
        parent[rf] = ri;
        least[ri] = std::min(least[ri], least[rf]);
    }
};

} // namespace

Clause canonical_clause(int l1, int l2, int l3) {
    Clause c{l1, l2, l3};
    std::sort(c.begin(), c.end(), [](int a, int b) { return literal_key(a) < literal_key(b); });
    return c;
}

GammaFormula build_gamma(const GraphMap& m, const ConfigLimits& limits) {
    GammaFormula g;
    g.config2 = build_config(m, 2, limits);
    g.comps = components(g.config2);

    const std::array<int, 2> tau{1, 0};
    ActionResult tau_action = act(g.config2, g.comps, tau);
    for (std::int32_t k = 0; k < g.comps.count; ++k)
        if (tau_action.component_image[k] == k)
            throw gamma_undefined_error(
                "pair covering is nontrivial: component " + std::to_string(k) +
                " is fixed by the involution, so the formula is undefined");

    // Variables: involution orbits; the representative holds the orbit's
    // lexicographically least pair, which is the lower component id.
    g.comp_literal.assign(g.comps.count, 0);
    for (std::int32_t k = 0; k < g.comps.count; ++k) {
        if (g.comp_literal[k] != 0) continue;
        std::int32_t partner = tau_action.component_image[k];
        int var = static_cast<int>(g.var_rep_comp.size());
        g.var_rep_comp.push_back(k);
        g.comp_literal[k] = var + 1;
        g.comp_literal[partner] = -(var + 1);
    }
    g.var_count = static_cast<int>(g.var_rep_comp.size());

    const FiberIndex fi = fibers(m);
    std::map<Clause, std::array<VertexId, 3>, ClauseLess> clause_set;
    std::array<VertexId, 2> pair{};
    auto comp_of_pair = [&](VertexId x, VertexId y) {
        pair = {x, y};
        ConfigVertexId v = g.config2.find_tuple(pair);
        return g.comps.comp_of[v];
    };
    for (const auto& fiber : fi.vertex_fibers) {
        if (fiber.size() < 3) continue;
        for (VertexId a : fiber)
            for (VertexId b : fiber) {
                if (b == a) continue;
                std::int32_t cab = comp_of_pair(a, b);
                for (VertexId c : fiber) {
                    if (c == a || c == b) continue;
                    std::int32_t cbc = comp_of_pair(b, c);
                    std::int32_t cac = comp_of_pair(a, c);
                    if (cac == cab || cac == cbc) continue;
                    Clause cl = canonical_clause(-g.comp_literal[cab], -g.comp_literal[cbc],
                                                 g.comp_literal[cac]);
                    clause_set.try_emplace(cl, std::array<VertexId, 3>{a, b, c});
                }
            }
    }
    g.clauses.reserve(clause_set.size());
    g.provenance.reserve(clause_set.size());
    for (const auto& [cl, prov] : clause_set) {
        g.clauses.push_back(cl);
        g.provenance.push_back(prov);
    }
    return g;
}

std::optional<Assignment> solve_clauses(int var_count, const std::vector<Clause>& clauses) {
    ModelList one = Dpll(var_count, clauses, 1).run();
    if (one.models.empty()) return std::nullopt;
    return one.models.front();
}

std::optional<Assignment> solve(const GammaFormula& g) {
    return solve_clauses(g.var_count, g.clauses);
}

ModelList enumerate_models_clauses(int var_count, const std::vector<Clause>& clauses,
                                   std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("model cap must be at least 1");
    return Dpll(var_count, clauses, cap).run();
}

ModelList enumerate_models(const GammaFormula& g, std::size_t cap) {
    return enumerate_models_clauses(g.var_count, g.clauses, cap);
}

NuPartition nu3_closure(const GraphMap& m, const ConfigLimits& limits) {
    ConfigGraph c2 = build_config(m, 2, limits);
    ComponentMap cm = components(c2);
    const FiberIndex fi = fibers(m);

    NuPartition nu;
    nu.comp_count = cm.count;
    nu.comp_least_pair.resize(cm.count);
    for (std::int32_t k = 0; k < cm.count; ++k) {
        auto t = c2.tuple(cm.least_vertex[k]);
        nu.comp_least_pair[k] = {t[0], t[1]};
    }
    UnionFind uf(cm.count);

    std::array<VertexId, 2> pair{};
    auto comp_of_pair = [&](VertexId x, VertexId y) {
        pair = {x, y};
        return cm.comp_of[c2.find_tuple(pair)];
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& fiber : fi.vertex_fibers) {
            if (fiber.size() < 3) continue;
            for (VertexId a : fiber)
                for (VertexId b : fiber) {
                    if (b == a) continue;
                    std::int32_t cab = comp_of_pair(a, b);
                    for (VertexId c : fiber) {
                        if (c == a || c == b) continue;
                        std::int32_t cbc = comp_of_pair(b, c);
                        if (uf.find(cab) != uf.find(cbc)) continue;
                        std::int32_t cac = comp_of_pair(a, c);
                        if (uf.find(cac) == uf.find(cab)) continue;
                        nu.log.push_back({{a, b, c}, uf.least[uf.find(cac)],
                                          uf.least[uf.find(cab)]});
                        uf.unite(cac, cab);
                        changed = true;
                    }
                }
        }
    }

    nu.class_of.resize(cm.count);
    for (std::int32_t k = 0; k < cm.count; ++k) nu.class_of[k] = uf.least[uf.find(k)];

    nu.vanishes = true;
    for (const auto& fiber : fi.vertex_fibers) {
        if (!nu.vanishes) break;
        if (fiber.size() < 3) continue;
        for (VertexId a : fiber) {
            if (!nu.vanishes) break;
            for (VertexId b : fiber) {
                if (b == a || !nu.vanishes) continue;
                std::int32_t cab = comp_of_pair(a, b);
                for (VertexId c : fiber) {
                    if (c == a || c == b) continue;
                    std::int32_t cbc = comp_of_pair(b, c);
                    if (uf.find(cab) != uf.find(cbc)) continue;
                    std::int32_t cca = comp_of_pair(c, a);
                    if (uf.find(cca) == uf.find(cab)) {
                        nu.vanishes = false;
                        break;
                    }
                }
            }
        }
    }
    return nu;
}

bool mu2_vanishes(const GraphMap& m, const ConfigLimits& limits) {
    return p_trivial(m, 2, limits);
}

} // namespace graphlift
