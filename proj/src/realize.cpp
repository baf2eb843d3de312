#include "graphlift/realize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "graphlift/errors.hpp"
#include "text_tokens.hpp"

namespace graphlift {

namespace {

using detail::Line;
using detail::expect_arity;
using detail::fail;
using detail::tokenize;

std::array<int, 3> twin_of(const std::array<int, 3>& t) { return {-t[0], -t[1], -t[2]}; }

int parse_literal(const Line& line, int tok_idx, int var_count) {
    const std::string& s = line.tokens[tok_idx].text;
    int value = 0;
    try {
        std::size_t used = 0;
        value = std::stoi(s, &used);
        if (used != s.size()) fail("malformed literal: " + s, line, tok_idx);
    } catch (const parse_error&) {
        throw;
    } catch (...) {
        fail("malformed literal: " + s, line, tok_idx);
    }
    if (value == 0) fail("zero literal", line, tok_idx);
    if (std::abs(value) > var_count)
        fail("variable index out of range: " + s, line, tok_idx);
    return value;
}

// Gadget naming: one letter per twin pair while they last.
std::string clause_prefix(int j) {
    if (j <= 26) return std::string(1, static_cast<char>('a' + j - 1));
    return "t" + std::to_string(j);
}

} // namespace

CnfSpec parse_cnf(std::istream& in) {
    const std::vector<Line> lines = tokenize(in);
    if (lines.empty()) throw parse_error("empty input, expected 'gcnf 1' header", 1, 1);

    std::size_t i = 0;
    expect_arity(lines[i], 2);
    if (lines[i].tokens[0].text != "gcnf" || lines[i].tokens[1].text != "1")
        fail("expected 'gcnf 1' header", lines[i], 0);
    ++i;

    if (i >= lines.size() || lines[i].tokens[0].text != "vars")
        throw parse_error("expected 'vars <n>' line", i < lines.size() ? lines[i].number : 2, 1);
    expect_arity(lines[i], 2);
    CnfSpec c;
    try {
        c.var_count = std::stoi(lines[i].tokens[1].text);
    } catch (...) {
        fail("malformed variable count", lines[i], 1);
    }
    if (c.var_count < 0) fail("negative variable count", lines[i], 1);
    ++i;

    while (i < lines.size() && lines[i].tokens[0].text == "imp") {
        expect_arity(lines[i], 4);
        std::array<int, 3> t{parse_literal(lines[i], 1, c.var_count),
                             parse_literal(lines[i], 2, c.var_count),
                             parse_literal(lines[i], 3, c.var_count)};
        c.triples.push_back(t);
        ++i;
    }

    if (i >= lines.size())
        throw parse_error("missing 'end' line", lines.back().number + 1, 1);
    if (lines[i].tokens[0].text != "end") fail("expected 'imp' or 'end'", lines[i], 0);
    expect_arity(lines[i], 1);
    if (i + 1 != lines.size()) fail("content after 'end'", lines[i + 1], 0);
    return c;
}

CnfSpec parse_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

std::string serialize_cnf(const CnfSpec& c) {
    std::ostringstream out;
    out << "gcnf 1\nvars " << c.var_count << "\n";
    for (const auto& t : c.triples)
        out << "imp " << t[0] << " " << t[1] << " " << t[2] << "\n";
    out << "end\n";
    return out.str();
}

CnfSpec validate_shape(const CnfSpec& c, bool strict) {
    for (const auto& t : c.triples) {
        int a = std::abs(t[0]), b = std::abs(t[1]), g = std::abs(t[2]);
        if (a == b || a == g || b == g)
            throw validation_error("triple uses a variable twice: (" + std::to_string(t[0]) +
                                   ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) +
                                   ")");
    }
    CnfSpec out = c;
    out.added_twins.clear();
    std::set<std::array<int, 3>> present(c.triples.begin(), c.triples.end());
    for (const auto& t : c.triples) {
        std::array<int, 3> tw = twin_of(t);
        if (present.count(tw)) continue;
        if (strict)
            throw validation_error("missing negated twin of (" + std::to_string(t[0]) + ", " +
                                   std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")");
        present.insert(tw);
        out.triples.push_back(tw);
        out.added_twins.push_back(tw);
    }
    return out;
}

RealizedMap realize(const CnfSpec& c) {
    // One representative per twin pair, in input order.
    std::vector<std::array<int, 3>> reduced;
    std::set<std::array<int, 3>> seen;
    for (const auto& t : c.triples) {
        if (seen.count(t) || seen.count(twin_of(t))) continue;
        seen.insert(t);
        reduced.push_back(t);
    }

    RealizedMap r;
    MultiGraph& G = r.map.domain;
    MultiGraph& H = r.map.codomain;

    std::vector<std::array<VertexId, 3>> gadget(reduced.size());
    std::vector<VertexId> h_vertex(reduced.size());
    for (std::size_t j = 0; j < reduced.size(); ++j) {
        std::string prefix = clause_prefix(static_cast<int>(j) + 1);
        h_vertex[j] = H.add_vertex(prefix);
        for (int i = 0; i < 3; ++i) {
            gadget[j][i] = G.add_vertex(prefix + std::to_string(i + 1));
            r.map.vmap.push_back(h_vertex[j]);
        }
    }

    // Literal-sign rules fill the per-variable pair sets.
    struct OrientedPair {
        VertexId first, second;
        std::size_t clause;
    };
    std::vector<std::vector<OrientedPair>> sets(c.var_count + 1);
    for (std::size_t j = 0; j < reduced.size(); ++j) {
        auto add = [&](int lit, int i, int k) {
            int var = std::abs(lit);
            if (lit > 0)
                sets[var].push_back({gadget[j][i], gadget[j][k], j});
            else
                sets[var].push_back({gadget[j][k], gadget[j][i], j});
        };
        add(reduced[j][0], 0, 1);
        add(reduced[j][1], 1, 2);
        add(reduced[j][2], 0, 2);
    }

    // One cycle of doubled edges per populated variable; a singleton set
    // degenerates into loops.
    for (int l = 1; l <= c.var_count; ++l) {
        const auto& pairs = sets[l];
        if (pairs.empty()) {
            r.dropped_vars.push_back(l);
            continue;
        }
        r.realized_vars.push_back(l);
        r.anchor_pair.push_back({pairs[0].first, pairs[0].second});
        const std::size_t s = pairs.size();
        for (std::size_t i = 0; i < s; ++i) {
            const std::size_t next = (i + 1) % s;
            std::string base = "e" + std::to_string(l) + "." + std::to_string(i + 1);
            EdgeId he = H.add_edge(base, h_vertex[pairs[i].clause], h_vertex[pairs[next].clause]);
            G.add_edge(base + ".1", pairs[i].first, pairs[next].first);
            r.map.emap.push_back(he);
            G.add_edge(base + ".2", pairs[i].second, pairs[next].second);
            r.map.emap.push_back(he);
        }
    }

    validate(r.map);
    return r;
}

RealizationReport verify_realization(const RealizedMap& r, const CnfSpec& c,
                                     const ConfigLimits& limits) {
    const GraphMap& m = r.map;
    const FiberIndex fi = fibers(m);
    RealizationReport rep;

    rep.edges_two_preimages = true;
    for (const auto& fiber : fi.edge_fibers)
        if (fiber.size() != 2) rep.edges_two_preimages = false;

    rep.vertices_three_preimages = true;
    for (const auto& fiber : fi.vertex_fibers)
        if (fiber.size() != 3) rep.vertices_three_preimages = false;

    rep.g_degree_four = true;
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        if (m.domain.degree(v) != 4) rep.g_degree_four = false;

    rep.h_degree_six = true;
    for (VertexId v = 0; v < m.codomain.vertex_count(); ++v)
        if (m.codomain.degree(v) != 6) rep.h_degree_six = false;

    ConfigGraph c2 = build_config(m, 2, limits);
    std::vector<int> cfg_degree(c2.vertex_count(), 0);
    for (const ConfigEdge& e : c2.edges()) {
        cfg_degree[e.u] += (e.u == e.w) ? 2 : 1;
        if (e.w != e.u) cfg_degree[e.w] += 1;
    }
    rep.k2_two_regular = true;
    for (int d : cfg_degree)
        if (d != 2) rep.k2_two_regular = false;

    ComponentMap cm = components(c2);
    rep.p2_trivial = p_trivial_in(c2, cm);

    rep.gamma_equivalent = false;
    if (rep.p2_trivial) {
        GammaFormula g = build_gamma(m, limits);
        rep.gamma_vars = g.var_count;
        rep.gamma_clauses = static_cast<int>(g.clauses.size());

        // Translate the input through the recorded variable correspondence and
        // compare canonical clause sets.
        std::vector<int> gamma_lit(c.var_count + 1, 0);
        bool anchors_ok = g.var_count == static_cast<int>(r.realized_vars.size());
        std::array<VertexId, 2> pair{};
        for (std::size_t i = 0; anchors_ok && i < r.realized_vars.size(); ++i) {
            pair = {r.anchor_pair[i][0], r.anchor_pair[i][1]};
            ConfigVertexId v = g.config2.find_tuple(pair);
            if (v < 0) {
                anchors_ok = false;
                break;
            }
            gamma_lit[r.realized_vars[i]] = g.comp_literal[g.comps.comp_of[v]];
        }
        if (anchors_ok) {
            auto translate = [&](int lit) {
                int t = gamma_lit[std::abs(lit)];
                return lit > 0 ? t : -t;
            };
            std::vector<Clause> expected;
            for (const auto& t : c.triples)
                expected.push_back(
                    canonical_clause(-translate(t[0]), -translate(t[1]), translate(t[2])));
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            std::vector<Clause> actual = g.clauses;
            std::sort(actual.begin(), actual.end());
            rep.gamma_equivalent = expected == actual;
        }
    }
    return rep;
}

bool cnf_eval(const CnfSpec& c, const std::vector<std::uint8_t>& assignment) {
    for (const auto& t : c.triples) {
        auto truth = [&](int lit) {
            bool v = assignment[std::abs(lit) - 1] == 1;
            return lit > 0 ? v : !v;
        };
        if (truth(t[0]) && truth(t[1]) && !truth(t[2])) return false;
    }
    return true;
}

bool cnf_satisfiable(const CnfSpec& c) {
    std::vector<int> occurring;
    {
        std::vector<char> occ(c.var_count + 1, 0);
        for (const auto& t : c.triples)
            for (int lit : t) occ[std::abs(lit)] = 1;
        for (int v = 1; v <= c.var_count; ++v)
            if (occ[v]) occurring.push_back(v);
    }
    std::vector<std::uint8_t> a(c.var_count, 0);
    const std::uint64_t total = std::uint64_t{1} << occurring.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < occurring.size(); ++i)
            a[occurring[i] - 1] = (mask >> i) & 1;
        if (cnf_eval(c, a)) return true;
    }
    return false;
}

std::uint64_t cnf_model_count_over_occurring(const CnfSpec& c) {
    std::vector<int> occurring;
    {
        std::vector<char> occ(c.var_count + 1, 0);
        for (const auto& t : c.triples)
            for (int lit : t) occ[std::abs(lit)] = 1;
        for (int v = 1; v <= c.var_count; ++v)
            if (occ[v]) occurring.push_back(v);
    }
    std::vector<std::uint8_t> a(c.var_count, 0);
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << occurring.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < occurring.size(); ++i)
            a[occurring[i] - 1] = (mask >> i) & 1;
        if (cnf_eval(c, a)) ++count;
    }
    return count;
}

} // namespace graphlift
