#include "graphlift/graphmap.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "graphlift/errors.hpp"
#include "text_tokens.hpp"

namespace graphlift {

namespace {

using detail::Line;
using detail::expect_arity;
using detail::fail;
using detail::tokenize;

const std::string& ident(const Line& line, int tok_idx) {
    if (tok_idx >= static_cast<int>(line.tokens.size()))
        fail("missing identifier", line, tok_idx);
    const std::string& s = line.tokens[tok_idx].text;
    if (!detail::valid_identifier(s)) fail("invalid identifier: " + s, line, tok_idx);
    return s;
}

// Reads `vertex` / `edge` lines until a token that starts the next section.
std::size_t parse_graph_section(const std::vector<Line>& lines, std::size_t i, MultiGraph& g) {
    bool edges_started = false;
    while (i < lines.size()) {
        const Line& line = lines[i];
        const std::string& head = line.tokens[0].text;
        if (head == "vertex") {
            if (edges_started) fail("vertex line after edge lines", line, 0);
            expect_arity(line, 2);
            const std::string& name = ident(line, 1);
            if (g.find_vertex(name) >= 0) fail("duplicate identifier: " + name, line, 1);
            g.add_vertex(name);
            ++i;
        } else if (head == "edge") {
            edges_started = true;
            expect_arity(line, 4);
            const std::string& name = ident(line, 1);
            const std::string& u = ident(line, 2);
            const std::string& v = ident(line, 3);
            if (g.find_edge(name) >= 0) fail("duplicate identifier: " + name, line, 1);
            if (g.find_vertex(u) < 0) fail("unknown identifier: " + u, line, 2);
            if (g.find_vertex(v) < 0) fail("unknown identifier: " + v, line, 3);
            g.add_edge(name, u, v);
            ++i;
        } else {
            break;
        }
    }
    return i;
}

} // namespace

GraphMap parse_gmap(std::istream& in) {
    const std::vector<Line> lines = tokenize(in);
    if (lines.empty()) throw parse_error("empty input, expected 'gmap 1' header", 1, 1);

    std::size_t i = 0;
    {
        const Line& header = lines[i];
        expect_arity(header, 2);
        if (header.tokens[0].text != "gmap" || header.tokens[1].text != "1")
            fail("expected 'gmap 1' header", header, 0);
        ++i;
    }

    auto expect_section = [&](const char* name) {
        if (i >= lines.size())
            throw parse_error(std::string("missing section: ") + name,
                              lines.back().number + 1, 1);
        const Line& line = lines[i];
        if (line.tokens[0].text != name)
            fail(std::string("expected section '") + name + "', sections must appear in order",
                 line, 0);
        expect_arity(line, 1);
        ++i;
    };

    GraphMap m;
    expect_section("codomain");
    i = parse_graph_section(lines, i, m.codomain);
    expect_section("domain");
    i = parse_graph_section(lines, i, m.domain);
    expect_section("map");

    m.vmap.assign(m.domain.vertex_count(), -1);
    m.emap.assign(m.domain.edge_count(), -1);
    while (i < lines.size()) {
        const Line& line = lines[i];
        const std::string& head = line.tokens[0].text;
        if (head == "v") {
            expect_arity(line, 3);
            const std::string& gv = ident(line, 1);
            const std::string& hv = ident(line, 2);
            VertexId gi = m.domain.find_vertex(gv);
            VertexId hi = m.codomain.find_vertex(hv);
            if (gi < 0) fail("unknown identifier: " + gv, line, 1);
            if (hi < 0) fail("unknown identifier: " + hv, line, 2);
            if (m.vmap[gi] >= 0) fail("duplicate mapping for vertex: " + gv, line, 1);
            m.vmap[gi] = hi;
            ++i;
        } else if (head == "e") {
            expect_arity(line, 3);
            const std::string& ge = ident(line, 1);
            const std::string& he = ident(line, 2);
            EdgeId gi = m.domain.find_edge(ge);
            EdgeId hi = m.codomain.find_edge(he);
            if (gi < 0) fail("unknown identifier: " + ge, line, 1);
            if (hi < 0) fail("unknown identifier: " + he, line, 2);
            if (m.emap[gi] >= 0) fail("duplicate mapping for edge: " + ge, line, 1);
            m.emap[gi] = hi;
            ++i;
        } else {
            break;
        }
    }

    if (i >= lines.size())
        throw parse_error("missing 'end' line", lines.back().number + 1, 1);
    if (lines[i].tokens[0].text != "end") fail("expected 'end'", lines[i], 0);
    expect_arity(lines[i], 1);
    if (i + 1 != lines.size()) fail("content after 'end'", lines[i + 1], 0);

    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        if (m.vmap[v] < 0)
            throw parse_error("unmapped domain vertex: " + m.domain.vertex_name(v),
                              lines[i].number, 1);
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e)
        if (m.emap[e] < 0)
            throw parse_error("unmapped domain edge: " + m.domain.edge_name(e),
                              lines[i].number, 1);

    validate(m);
    return m;
}

GraphMap parse_gmap(const std::string& text) {
    std::istringstream in(text);
    return parse_gmap(in);
}

std::string serialize_gmap(const GraphMap& m) {
    std::ostringstream out;
    out << "gmap 1\n";
    auto emit_graph = [&](const MultiGraph& g, const char* section) {
        out << section << "\n";
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out << "vertex " << g.vertex_name(v) << "\n";
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge_ends(e);
            out << "edge " << g.edge_name(e) << " " << g.vertex_name(u) << " "
                << g.vertex_name(v) << "\n";
        }
    };
    emit_graph(m.codomain, "codomain");
    emit_graph(m.domain, "domain");
    out << "map\n";
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        out << "v " << m.domain.vertex_name(v) << " " << m.codomain.vertex_name(m.vmap[v])
            << "\n";
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e)
        out << "e " << m.domain.edge_name(e) << " " << m.codomain.edge_name(m.emap[e]) << "\n";
    out << "end\n";
    return out.str();
}

void validate(const GraphMap& m) {
    if (static_cast<std::int32_t>(m.vmap.size()) != m.domain.vertex_count() ||
        static_cast<std::int32_t>(m.emap.size()) != m.domain.edge_count())
        throw validation_error("map tables do not cover the domain");
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        if (m.vmap[v] < 0 || m.vmap[v] >= m.codomain.vertex_count())
            throw validation_error("vertex image out of range: " + m.domain.vertex_name(v));
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e) {
        if (m.emap[e] < 0 || m.emap[e] >= m.codomain.edge_count())
            throw validation_error("edge image out of range: " + m.domain.edge_name(e));
        auto [u, v] = m.domain.edge_ends(e);
        auto [p, q] = m.codomain.edge_ends(m.emap[e]);
        VertexId fu = m.vmap[u], fv = m.vmap[v];
        bool match = (fu == p && fv == q) || (fu == q && fv == p);
        if (!match)
            throw validation_error("endpoint mismatch on edge " + m.domain.edge_name(e) +
                                   ": image endpoints do not agree with " +
                                   m.codomain.edge_name(m.emap[e]));
    }
}

FiberIndex fibers(const GraphMap& m) {
    FiberIndex fi;
    fi.vertex_fibers.resize(m.codomain.vertex_count());
    fi.edge_fibers.resize(m.codomain.edge_count());
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        fi.vertex_fibers[m.vmap[v]].push_back(v);
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e)
        fi.edge_fibers[m.emap[e]].push_back(e);
    return fi;
}

GraphMap restrict_multiple(const GraphMap& m) {
    const FiberIndex fi = fibers(m);

    std::vector<char> keep_edge(m.domain.edge_count(), 0);
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e)
        keep_edge[e] = fi.edge_fibers[m.emap[e]].size() >= 2;

    std::vector<char> keep_vertex(m.domain.vertex_count(), 0);
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        if (fi.vertex_fibers[m.vmap[v]].size() >= 2) keep_vertex[v] = 1;
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e)
        if (keep_edge[e]) {
            auto [u, v] = m.domain.edge_ends(e);
            keep_vertex[u] = keep_vertex[v] = 1;
        }

    std::vector<char> keep_hvertex(m.codomain.vertex_count(), 0);
    std::vector<char> keep_hedge(m.codomain.edge_count(), 0);
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        if (keep_vertex[v]) keep_hvertex[m.vmap[v]] = 1;
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e)
        if (keep_edge[e]) keep_hedge[m.emap[e]] = 1;

    GraphMap r;
    std::vector<VertexId> hv_new(m.codomain.vertex_count(), -1);
    std::vector<EdgeId> he_new(m.codomain.edge_count(), -1);
    for (VertexId v = 0; v < m.codomain.vertex_count(); ++v)
        if (keep_hvertex[v]) hv_new[v] = r.codomain.add_vertex(m.codomain.vertex_name(v));
    for (EdgeId e = 0; e < m.codomain.edge_count(); ++e)
        if (keep_hedge[e]) {
            auto [p, q] = m.codomain.edge_ends(e);
            he_new[e] = r.codomain.add_edge(m.codomain.edge_name(e), hv_new[p], hv_new[q]);
        }

    std::vector<VertexId> gv_new(m.domain.vertex_count(), -1);
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
        if (keep_vertex[v]) {
            gv_new[v] = r.domain.add_vertex(m.domain.vertex_name(v));
            r.vmap.push_back(hv_new[m.vmap[v]]);
        }
    for (EdgeId e = 0; e < m.domain.edge_count(); ++e)
        if (keep_edge[e]) {
            auto [u, v] = m.domain.edge_ends(e);
            r.domain.add_edge(m.domain.edge_name(e), gv_new[u], gv_new[v]);
            r.emap.push_back(he_new[m.emap[e]]);
        }
    return r;
}

StabilityResult is_stable(const GraphMap& m) {
    const FiberIndex fi = fibers(m);

    auto regular = [&](VertexId v) {
        if (m.domain.degree(v) != m.codomain.degree(m.vmap[v])) return false;
        const auto& inc = m.domain.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (m.emap[inc[i]] == m.emap[inc[j]]) return false;
        return true;
    };

    for (VertexId w = 0; w < m.codomain.vertex_count(); ++w) {
        int non_regular = 0;
        for (VertexId v : fi.vertex_fibers[w])
            if (!regular(v)) ++non_regular;
        bool ok = (m.codomain.degree(w) == 2) ? non_regular <= 1 : non_regular == 0;
        if (!ok) return {false, w};
    }
    return {true, std::nullopt};
}

} // namespace graphlift
