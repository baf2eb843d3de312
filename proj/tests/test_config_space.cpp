#include <doctest.h>

#include <numeric>
#include <random>

#include "graphlift/config_space.hpp"
#include "graphlift/errors.hpp"
#include "testutil.hpp"

using namespace graphlift;

namespace {

std::int64_t falling_factorial_sum(const GraphMap& m, int n) {
    FiberIndex fi = fibers(m);
    std::int64_t total = 0;
    for (const auto& f : fi.vertex_fibers) {
        std::int64_t ff = 1;
        for (int j = 0; j < n; ++j) ff *= static_cast<std::int64_t>(f.size()) - j;
        if (ff > 0) total += ff;
    }
    return total;
}

} // namespace

TEST_CASE("build_config vertex counts") {
    SUBCASE("identity map gives an empty configuration graph") {
        ConfigGraph c = build_config(testutil::identity_path(4), 2);
        CHECK(c.vertex_count() == 0);
        CHECK(c.edges().empty());
    }
    SUBCASE("sieklucki pair graph has 36 vertices") {
        ConfigGraph c = build_config(testutil::sieklucki(), 2);
        CHECK(c.vertex_count() == 36);
    }
    SUBCASE("double cover pair graph") {
        ConfigGraph c = build_config(testutil::double_cover(), 2);
        CHECK(c.vertex_count() == 4);
        CHECK(c.edges().size() == 2);
        ComponentMap cm = components(c);
        CHECK(cm.count == 2);
        for (std::int64_t s : cm.sizes) CHECK(s == 2);
    }
    SUBCASE("falling-factorial invariant on random maps") {
        std::mt19937_64 rng(201);
        for (int i = 0; i < 40; ++i) {
            GraphMap m = testutil::random_map(rng);
            for (int n = 2; n <= 3; ++n) {
                ConfigGraph c = build_config(m, n);
                CHECK(c.vertex_count() == falling_factorial_sum(m, n));
            }
        }
    }
    SUBCASE("resource cap") {
        GraphMap m = testutil::sieklucki();
        ConfigLimits tight;
        tight.max_vertices = 10;
        CHECK_THROWS_AS(build_config(m, 2, tight), resource_limit_error);
    }
    SUBCASE("arity out of range") {
        CHECK_THROWS_AS(build_config(testutil::double_cover(), 1), std::invalid_argument);
        CHECK_THROWS_AS(build_config(testutil::double_cover(), 4), std::invalid_argument);
        ConfigLimits wide;
        wide.max_arity = 5;
        CHECK_NOTHROW(build_config(testutil::double_cover(), 4, wide));
        CHECK_THROWS_AS(build_config(testutil::double_cover(), 6, wide), std::invalid_argument);
    }
}

TEST_CASE("parallel domain edges yield parallel configuration edges") {
    GraphMap m;
    m.codomain.add_vertex("p");
    m.codomain.add_vertex("q");
    m.codomain.add_edge("c", "p", "q");
    for (const char* v : {"x", "y", "u", "w"}) m.domain.add_vertex(v);
    m.vmap = {0, 1, 0, 1};
    m.domain.add_edge("e1", "x", "y");
    m.domain.add_edge("e2", "x", "y"); // parallel copy
    m.domain.add_edge("g", "u", "w");
    m.emap = {0, 0, 0};
    validate(m);
    ConfigGraph c = build_config(m, 2);
    // tuples (e1,g), (e2,g), (g,e1), (g,e2); the tied pair (e1,e2) is not
    // vertex-disjoint and contributes nothing
    REQUIRE(c.edges().size() == 4);
    int parallel_pairs = 0;
    for (std::size_t i = 0; i < c.edges().size(); ++i)
        for (std::size_t j = i + 1; j < c.edges().size(); ++j) {
            const ConfigEdge &a = c.edges()[i], &b = c.edges()[j];
            if ((a.u == b.u && a.w == b.w) || (a.u == b.w && a.w == b.u)) ++parallel_pairs;
        }
    CHECK(parallel_pairs == 2);
}

TEST_CASE("disjoint preimages of a loop glue both pairings") {
    GraphMap m;
    m.codomain.add_vertex("p");
    m.codomain.add_edge("c", "p", "p");
    for (const char* v : {"x", "y", "z", "t"}) {
        m.domain.add_vertex(v);
        m.vmap.push_back(0);
    }
    m.domain.add_edge("e", "x", "y");
    m.domain.add_edge("g", "z", "t");
    m.emap = {0, 0};
    validate(m);
    ConfigGraph c = build_config(m, 2);
    CHECK(c.vertex_count() == 12);
    CHECK(c.edges().size() == 4); // two orientation pairings per ordered tuple
    // separated-interval orders match the satisfying assignments exactly
    GammaFormula gf = build_gamma(m);
    CHECK(enumerate_models(gf, 1000).models.size() == 8);
    CHECK(brute_force_liftings(m, 1000).count == 8);
}

TEST_CASE("components and the involution") {
    SUBCASE("empty graph") {
        ComponentMap cm = components(build_config(testutil::identity_path(3), 2));
        CHECK(cm.count == 0);
    }
    SUBCASE("sieklucki: the component of (a3,a2) contains (a2,a3)") {
        GraphMap m = testutil::sieklucki();
        ConfigGraph c = build_config(m, 2);
        ComponentMap cm = components(c);
        VertexId a2 = m.domain.find_vertex("a2");
        VertexId a3 = m.domain.find_vertex("a3");
        std::array<VertexId, 2> t1{a3, a2}, t2{a2, a3};
        CHECK(cm.comp_of[c.find_tuple(t1)] == cm.comp_of[c.find_tuple(t2)]);
    }
    SUBCASE("double cover components are swapped by the involution") {
        ConfigGraph c = build_config(testutil::double_cover(), 2);
        ComponentMap cm = components(c);
        const std::array<int, 2> tau{1, 0};
        ActionResult a = act(c, cm, tau);
        CHECK(a.component_image[0] == 1);
        CHECK(a.component_image[1] == 0);
    }
}

TEST_CASE("symmetric group action") {
    SUBCASE("identity permutation acts trivially") {
        ConfigGraph c = build_config(testutil::double_cover(), 2);
        ComponentMap cm = components(c);
        const std::array<int, 2> id{0, 1};
        ActionResult a = act(c, cm, id);
        for (ConfigVertexId v = 0; v < c.vertex_count(); ++v) CHECK(a.vertex_image[v] == v);
    }
    SUBCASE("involution squares to the identity") {
        std::mt19937_64 rng(202);
        for (int i = 0; i < 20; ++i) {
            GraphMap m = testutil::random_map(rng);
            ConfigGraph c = build_config(m, 2);
            ComponentMap cm = components(c);
            const std::array<int, 2> tau{1, 0};
            ActionResult a = act(c, cm, tau);
            for (ConfigVertexId v = 0; v < c.vertex_count(); ++v)
                CHECK(a.vertex_image[a.vertex_image[v]] == v);
            // components in one involution orbit have equal sizes
            for (std::int32_t k = 0; k < cm.count; ++k)
                CHECK(cm.sizes[a.component_image[k]] == cm.sizes[k]);
        }
    }
    SUBCASE("composition is respected and the component action is well-defined") {
        std::mt19937_64 rng(203);
        for (int i = 0; i < 15; ++i) {
            GraphMap m = testutil::random_map(rng);
            ConfigGraph c = build_config(m, 3);
            if (c.vertex_count() == 0) continue;
            ComponentMap cm = components(c);
            std::array<int, 3> p{0, 1, 2}, q{0, 1, 2};
            std::shuffle(p.begin(), p.end(), rng);
            std::shuffle(q.begin(), q.end(), rng);
            std::array<int, 3> qp{};
            for (int j = 0; j < 3; ++j) qp[j] = q[p[j]];
            ActionResult ap = act(c, cm, p);
            ActionResult aq = act(c, cm, q);
            ActionResult aqp = act(c, cm, qp);
            for (ConfigVertexId v = 0; v < c.vertex_count(); ++v) {
                CHECK(aqp.vertex_image[v] == aq.vertex_image[ap.vertex_image[v]]);
                // the induced component map agrees with any member
                CHECK(cm.comp_of[ap.vertex_image[v]] == ap.component_image[cm.comp_of[v]]);
            }
        }
    }
}

TEST_CASE("obstructor search") {
    SUBCASE("sieklucki has a valid 2-obstructor") {
        GraphMap m = testutil::sieklucki();
        auto w = find_obstructor(m, 2);
        REQUIRE(w.has_value());
        CHECK(w->arity == 2);
        CHECK(witness_valid(m, *w));
    }
    SUBCASE("the classical sixteen-step sieklucki walk replays") {
        GraphMap m = testutil::sieklucki();
        const char* walk1[] = {"a3", "b4", "c4", "d3", "c3", "b3", "a1", "b1", "c1",
                               "d1", "c1", "b1", "a1", "b3", "c3", "b2", "a2"};
        const char* walk2[] = {"a2", "b2", "c2", "d2", "c2", "b2", "a2", "b2", "c3",
                               "d3", "c4", "b4", "a3", "b4", "c4", "b4", "a3"};
        ObstructorWitness w;
        w.arity = 2;
        for (int i = 0; i < 17; ++i)
            w.path.push_back(
                {m.domain.find_vertex(walk1[i]), m.domain.find_vertex(walk2[i])});
        CHECK(witness_valid(m, w));
    }
    SUBCASE("double cover has none") {
        CHECK_FALSE(find_obstructor(testutil::double_cover(), 2).has_value());
    }
    SUBCASE("mobius double cover of the cycle has one") {
        GraphMap m = testutil::mobius_c4_over_c2();
        auto w = find_obstructor(m, 2);
        REQUIRE(w.has_value());
        CHECK(witness_valid(m, *w));
    }
    SUBCASE("tripod composite: none at arity 2, one at arity 3") {
        GraphMap m = testutil::tripod18();
        CHECK_FALSE(find_obstructor(m, 2).has_value());
        auto w = find_obstructor(m, 3);
        REQUIRE(w.has_value());
        CHECK(w->arity == 3);
        CHECK(witness_valid(m, *w));
    }
    SUBCASE("returned witnesses always replay on random maps") {
        std::mt19937_64 rng(204);
        for (int i = 0; i < 40; ++i) {
            GraphMap m = testutil::random_map(rng);
            for (int n = 2; n <= 3; ++n) {
                auto w = find_obstructor(m, n);
                if (w) {
                    CHECK(w->path.front() != w->path.back());
                    CHECK(witness_valid(m, *w));
                }
            }
        }
    }
}

TEST_CASE("high arities: the five-sheeted cover obstructs first at five") {
    GraphMap m = testutil::c10_over_digon();
    ConfigLimits wide;
    wide.max_arity = 5;
    for (int n = 2; n <= 4; ++n) {
        CHECK_FALSE(find_obstructor(m, n, wide).has_value());
        CHECK(p_trivial(m, n, wide));
    }
    auto w = find_obstructor(m, 5, wide);
    REQUIRE(w.has_value());
    CHECK(w->arity == 5);
    CHECK(witness_valid(m, *w, wide));
    CHECK_FALSE(p_trivial(m, 5, wide));
}

TEST_CASE("covering triviality") {
    SUBCASE("examples") {
        CHECK_FALSE(p_trivial(testutil::sieklucki(), 2));
        CHECK(p_trivial(testutil::double_cover(), 2));
        GraphMap t = testutil::tripod18();
        CHECK(p_trivial(t, 2));
        CHECK_FALSE(p_trivial(t, 3));
    }
    SUBCASE("arity-2 triviality agrees with the obstructor test") {
        std::mt19937_64 rng(205);
        for (int i = 0; i < 60; ++i) {
            GraphMap m = testutil::random_map(rng);
            CHECK(p_trivial(m, 2) == !find_obstructor(m, 2).has_value());
        }
    }
    SUBCASE("range-coupled equivalence with obstructors") {
        std::mt19937_64 rng(206);
        for (int i = 0; i < 40; ++i) {
            GraphMap m = testutil::random_map(rng);
            bool trivial_up_to_3 = p_trivial(m, 2) && p_trivial(m, 3);
            bool no_obstructors =
                !find_obstructor(m, 2).has_value() && !find_obstructor(m, 3).has_value();
            CHECK(trivial_up_to_3 == no_obstructors);
        }
    }
}
