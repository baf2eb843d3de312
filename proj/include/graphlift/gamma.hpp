#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphlift/config_space.hpp"
#include "graphlift/graphmap.hpp"

namespace graphlift {

// A clause is a disjunction of three literals; literals are signed 1-based
// variable indices. Clauses are canonicalized by sorting literals (variable
// ascending, positive before negative) and deduplicated.
using Clause = std::array<int, 3>;

// Total assignment, one byte (0/1) per variable.
using Assignment = std::vector<std::uint8_t>;

// The transitivity formula of a map: variables are the involution orbits of
// the pair-configuration components, clauses come from vertex triples. Only
// defined when the pair covering is trivial.
struct GammaFormula {
    int var_count = 0;
    std::vector<Clause> clauses;
    std::vector<std::array<VertexId, 3>> provenance; // one witnessing triple per clause

    std::vector<std::int32_t> var_rep_comp; // variable -> representative component
    std::vector<int> comp_literal;          // component -> signed literal

    // Pair machinery kept for converting assignments to fiber orders.
    ConfigGraph config2;
    ComponentMap comps;
};

struct ModelList {
    std::vector<Assignment> models;
    bool truncated = false;
};

struct NuMerge {
    std::array<VertexId, 3> cause; // the (a, b, c) triple that fired
    std::int32_t from_comp;        // class representative merged away
    std::int32_t into_comp;        // class representative absorbed into
};

// Coarsening of the component partition under the transitive-closure rule,
// with the merge log and the vanishing verdict.
struct NuPartition {
    std::int32_t comp_count = 0;
    std::vector<std::int32_t> class_of; // component -> class representative (min comp id)
    std::vector<std::array<VertexId, 2>> comp_least_pair; // component -> least member pair
    std::vector<NuMerge> log;
    bool vanishes = true;
};

// Sorts the literals into the canonical in-clause order (variable ascending,
// positive before negative).
Clause canonical_clause(int l1, int l2, int l3);

// Throws gamma_undefined_error when the pair covering is nontrivial.
GammaFormula build_gamma(const GraphMap& m, const ConfigLimits& limits = {});

// Complete DPLL search with unit propagation; branches on the lowest
// unassigned variable, value false first. Returns the first model in that
// order.
std::optional<Assignment> solve(const GammaFormula& g);
std::optional<Assignment> solve_clauses(int var_count, const std::vector<Clause>& clauses);

// All models in branch order, truncated at cap (cap >= 1).
ModelList enumerate_models(const GammaFormula& g, std::size_t cap);
ModelList enumerate_models_clauses(int var_count, const std::vector<Clause>& clauses,
                                   std::size_t cap);

// Smallest involution-compatible coarsening of the component partition closed
// under "(a,b) ~ (b,c) forces (a,c) into the same class". Does not require the
// pair covering to be trivial.
NuPartition nu3_closure(const GraphMap& m, const ConfigLimits& limits = {});

// Triviality of the pair covering.
bool mu2_vanishes(const GraphMap& m, const ConfigLimits& limits = {});

} // namespace graphlift
