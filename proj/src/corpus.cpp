#include <array>
#include <stdexcept>
#include <string>

#include "graphlift/analysis.hpp"
#include "graphlift/realize.hpp"

namespace graphlift {

namespace {

GraphMap make_sieklucki() {
    GraphMap m;
    for (const char* v : {"a", "b", "c", "d"}) m.codomain.add_vertex(v);
    m.codomain.add_edge("ab", "a", "b");
    m.codomain.add_edge("bc", "b", "c");
    m.codomain.add_edge("cd", "c", "d");
    for (const char* v : {"a1", "a2", "a3", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4",
                          "d1", "d2", "d3"})
        m.domain.add_vertex(v);
    struct E {
        const char* u;
        const char* v;
        const char* image;
    };
    // The long zig-zag chain and the short branch through b2.
    const std::array<E, 13> edges{{{"a3", "b4", "ab"},
                                   {"b4", "c4", "bc"},
                                   {"c4", "d3", "cd"},
                                   {"d3", "c3", "cd"},
                                   {"c3", "b3", "bc"},
                                   {"b3", "a1", "ab"},
                                   {"a1", "b1", "ab"},
                                   {"b1", "c1", "bc"},
                                   {"c1", "d1", "cd"},
                                   {"c3", "b2", "bc"},
                                   {"b2", "a2", "ab"},
                                   {"b2", "c2", "bc"},
                                   {"c2", "d2", "cd"}}};
    for (const E& e : edges) {
        m.domain.add_edge(std::string(e.u) + e.v, e.u, e.v);
        m.emap.push_back(m.codomain.find_edge(e.image));
    }
    for (VertexId v = 0; v < m.domain.vertex_count(); ++v) {
        std::string name = m.domain.vertex_name(v).substr(0, 1);
        m.vmap.push_back(m.codomain.find_vertex(name));
    }
    validate(m);
    return m;
}

// Threefold walk around the tripod: C18 -> C6 -> T.
GraphMap make_tripod18() {
    GraphMap m;
    for (const char* v : {"O", "a", "b", "c"}) m.codomain.add_vertex(v);
    m.codomain.add_edge("Oa", "O", "a");
    m.codomain.add_edge("Ob", "O", "b");
    m.codomain.add_edge("Oc", "O", "c");
    const std::array<const char*, 6> image_vertex{"a", "O", "b", "O", "c", "O"};
    const std::array<const char*, 6> image_edge{"Oa", "Ob", "Ob", "Oc", "Oc", "Oa"};
    for (int i = 0; i < 18; ++i) {
        m.domain.add_vertex("k" + std::to_string(i));
        m.vmap.push_back(m.codomain.find_vertex(image_vertex[i % 6]));
    }
    for (int i = 0; i < 18; ++i) {
        int j = (i + 1) % 18;
        m.domain.add_edge("k" + std::to_string(i) + "k" + std::to_string(j), i, j);
        m.emap.push_back(m.codomain.find_edge(image_edge[i % 6]));
    }
    validate(m);
    return m;
}

GraphMap make_double_cover() {
    GraphMap m;
    m.codomain.add_vertex("u");
    m.codomain.add_vertex("v");
    m.codomain.add_edge("uv", "u", "v");
    for (const char* v : {"u1", "v1", "u2", "v2"}) m.domain.add_vertex(v);
    m.vmap = {0, 1, 0, 1};
    m.domain.add_edge("e1", "u1", "v1");
    m.emap.push_back(0);
    m.domain.add_edge("e2", "u2", "v2");
    m.emap.push_back(0);
    validate(m);
    return m;
}

const char* kNontrivialGammaGcnf =
    "gcnf 1\n"
    "vars 3\n"
    "imp 1 2 3\n"
    "imp -1 -2 -3\n"
    "imp 1 2 -3\n"
    "imp -1 -2 3\n"
    "imp 1 -3 2\n"
    "imp -1 3 -2\n"
    "imp 1 -2 -3\n"
    "imp -1 2 3\n"
    "end\n";

GraphMap make_nontrivial_gamma() {
    CnfSpec spec = validate_shape(parse_cnf(std::string(kNontrivialGammaGcnf)), true);
    return realize(spec).map;
}

// Doubled parallel edges between the first and last gadget close the pair
// components into circles without changing the formula.
GraphMap make_counterexample_cycles() {
    GraphMap m = make_nontrivial_gamma();
    VertexId a = m.codomain.find_vertex("a");
    VertexId d = m.codomain.find_vertex("d");
    EdgeId ad1 = m.codomain.add_edge("ad1", a, d);
    EdgeId ad2 = m.codomain.add_edge("ad2", a, d);
    EdgeId ad3 = m.codomain.add_edge("ad3", a, d);
    auto add = [&](const char* name, const char* u, const char* v, EdgeId image) {
        m.domain.add_edge(name, u, v);
        m.emap.push_back(image);
    };
    add("a1d1", "a1", "d1", ad1);
    add("a2d2", "a2", "d2", ad1);
    add("a2d3", "a2", "d3", ad2);
    add("a3d2", "a3", "d2", ad2);
    add("a1d3", "a1", "d3", ad3);
    add("a3d1", "a3", "d1", ad3);
    validate(m);
    return m;
}

} // namespace

std::vector<std::string> corpus_names() {
    return {"sieklucki", "tripod18", "double-cover", "nontrivial-gamma",
            "counterexample-cycles"};
}

std::string corpus_gmap(const std::string& name) {
    if (name == "sieklucki") return serialize_gmap(make_sieklucki());
    if (name == "tripod18") return serialize_gmap(make_tripod18());
    if (name == "double-cover") return serialize_gmap(make_double_cover());
    if (name == "nontrivial-gamma") return serialize_gmap(make_nontrivial_gamma());
    if (name == "counterexample-cycles") return serialize_gmap(make_counterexample_cycles());
    throw std::invalid_argument("unknown corpus name: " + name);
}

std::string corpus_gcnf_nontrivial_gamma() { return kNontrivialGammaGcnf; }

} // namespace graphlift
