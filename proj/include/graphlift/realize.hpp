#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphlift/gamma.hpp"
#include "graphlift/graphmap.hpp"

namespace graphlift {

// A conjunction of implications (l1 & l2) -> l3 over signed variables, the
// admissible input shape: distinct variables per triple, closed under full
// negation.
struct CnfSpec {
    int var_count = 0;
    std::vector<std::array<int, 3>> triples;
    std::vector<std::array<int, 3>> added_twins; // appended by permissive validation
};

// Output of the graph-map construction together with the variable
// correspondence needed to compare formulas afterwards.
struct RealizedMap {
    GraphMap map;
    std::vector<int> realized_vars;                  // 1-based, ascending
    std::vector<std::array<VertexId, 2>> anchor_pair; // per realized var: first inserted pair
    std::vector<int> dropped_vars;                   // variables in no triple
};

struct RealizationReport {
    bool p2_trivial = false;
    bool gamma_equivalent = false;
    bool edges_two_preimages = false;
    bool vertices_three_preimages = false;
    bool g_degree_four = false;
    bool h_degree_six = false;
    bool k2_two_regular = false;

    int gamma_vars = 0;
    int gamma_clauses = 0;

    bool all_pass() const {
        return p2_trivial && gamma_equivalent && edges_two_preimages &&
               vertices_three_preimages && g_degree_four && h_degree_six && k2_two_regular;
    }
};

// GCNF v1 reader; throws parse_error.
CnfSpec parse_cnf(std::istream& in);
CnfSpec parse_cnf(const std::string& text);

std::string serialize_cnf(const CnfSpec& c);

// Enforces the shape conditions. Distinct-variable violations always reject;
// a missing negated twin rejects in strict mode and is appended (and recorded)
// otherwise.
CnfSpec validate_shape(const CnfSpec& c, bool strict);

// The gadget construction: one three-vertex fiber per twin pair, one cycle of
// doubled edges per variable. Deterministic.
RealizedMap realize(const CnfSpec& c);

// Checks the seven structural properties of the construction and the formula
// equivalence under the recorded correspondence.
RealizationReport verify_realization(const RealizedMap& r, const CnfSpec& c,
                                     const ConfigLimits& limits = {});

// Truth-table helpers (for cross-checks at small scale).
bool cnf_eval(const CnfSpec& c, const std::vector<std::uint8_t>& assignment);
bool cnf_satisfiable(const CnfSpec& c);
// Model count over the variables that occur in at least one triple.
std::uint64_t cnf_model_count_over_occurring(const CnfSpec& c);

} // namespace graphlift
