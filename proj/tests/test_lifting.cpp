#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "graphlift/errors.hpp"
#include "graphlift/lifting.hpp"
#include "testutil.hpp"

using namespace graphlift;

namespace {

std::vector<std::vector<VertexId>> flatten(const OrderCollection& o) { return o.fiber_order; }

} // namespace

TEST_CASE("assignment_to_orders on the double cover") {
    GraphMap m = testutil::double_cover();
    GammaFormula g = build_gamma(m);
    REQUIRE(g.var_count == 1);
    VertexId u1 = m.domain.find_vertex("u1"), u2 = m.domain.find_vertex("u2");
    VertexId v1 = m.domain.find_vertex("v1"), v2 = m.domain.find_vertex("v2");

    SUBCASE("true model orders u1 below u2") {
        OrderCollection o = assignment_to_orders(m, g, {1});
        CHECK(o.fiber_order[0] == std::vector<VertexId>{u1, u2});
        CHECK(o.fiber_order[1] == std::vector<VertexId>{v1, v2});
        Lifting l = orders_to_lifting(m, o);
        CHECK(l.heights[u1] == 1);
        CHECK(l.heights[u2] == 2);
        CHECK(l.heights[v1] == 1);
        CHECK(l.heights[v2] == 2);
    }
    SUBCASE("false model gives the reversed collection") {
        OrderCollection o = assignment_to_orders(m, g, {0});
        CHECK(o.fiber_order[0] == std::vector<VertexId>{u2, u1});
        CHECK(o.fiber_order[1] == std::vector<VertexId>{v2, v1});
    }
    SUBCASE("six models of three isolated points give the six orders") {
        GraphMap t = testutil::three_isolated();
        GammaFormula gt = build_gamma(t);
        ModelList ml = enumerate_models(gt, 100);
        REQUIRE(ml.models.size() == 6);
        std::set<std::vector<std::vector<VertexId>>> orders;
        for (const Assignment& a : ml.models)
            orders.insert(flatten(assignment_to_orders(t, gt, a)));
        CHECK(orders.size() == 6);
    }
}

TEST_CASE("is_admissible") {
    GraphMap m = testutil::double_cover();
    VertexId u1 = m.domain.find_vertex("u1"), u2 = m.domain.find_vertex("u2");
    VertexId v1 = m.domain.find_vertex("v1"), v2 = m.domain.find_vertex("v2");

    SUBCASE("identity map: vacuously admissible") {
        GraphMap id = testutil::identity_path(3);
        OrderCollection o;
        o.fiber_order = fibers(id).vertex_fibers;
        CHECK(is_admissible(id, o).ok);
    }
    SUBCASE("sign conflict is caught with a witness") {
        OrderCollection o;
        o.fiber_order = {{u1, u2}, {v2, v1}};
        AdmissibleCheck c = is_admissible(m, o);
        CHECK_FALSE(c.ok);
        REQUIRE(c.violation.has_value());
        CHECK(c.violation->first == m.domain.find_edge("e1"));
        CHECK(c.violation->second == m.domain.find_edge("e2"));
    }
    SUBCASE("parallel same-image edges with tied endpoints are never admissible") {
        GraphMap p;
        p.codomain.add_vertex("a");
        p.codomain.add_vertex("b");
        p.codomain.add_edge("ab", "a", "b");
        p.domain.add_vertex("x");
        p.domain.add_vertex("y");
        p.vmap = {0, 1};
        p.domain.add_edge("e1", "x", "y");
        p.domain.add_edge("e2", "x", "y");
        p.emap = {0, 0};
        validate(p);
        OrderCollection o;
        o.fiber_order = {{0}, {1}};
        CHECK_FALSE(is_admissible(p, o).ok);
        CHECK(brute_force_liftings(p, 10).count == 0);
    }
}

TEST_CASE("lifting round trips") {
    GraphMap m = testutil::double_cover();
    SUBCASE("orders -> lifting -> orders is the identity") {
        GammaFormula g = build_gamma(m);
        for (const Assignment& a : enumerate_models(g, 10).models) {
            OrderCollection o = assignment_to_orders(m, g, a);
            Lifting l = orders_to_lifting(m, o);
            CHECK(flatten(lifting_to_orders(m, l)) == flatten(o));
            Lifting again = orders_to_lifting(m, lifting_to_orders(m, l));
            CHECK(again.heights == l.heights);
        }
    }
    SUBCASE("identity map lifts with all heights one") {
        GraphMap id = testutil::identity_path(3);
        OrderCollection o;
        o.fiber_order = fibers(id).vertex_fibers;
        Lifting l = orders_to_lifting(id, o);
        for (std::int32_t h : l.heights) CHECK(h == 1);
        CHECK(verify_embedding(id, l).ok);
    }
    SUBCASE("inadmissible input is rejected") {
        OrderCollection bad;
        bad.fiber_order = {{m.domain.find_vertex("u1"), m.domain.find_vertex("u2")},
                           {m.domain.find_vertex("v2"), m.domain.find_vertex("v1")}};
        CHECK_THROWS_AS(orders_to_lifting(m, bad), std::invalid_argument);
    }
    SUBCASE("malformed heights are rejected") {
        Lifting l;
        l.heights = {1, 1, 1, 1};
        CHECK_THROWS_AS(lifting_to_orders(m, l), std::invalid_argument);
    }
}

TEST_CASE("verify_embedding") {
    GraphMap m = testutil::double_cover();
    VertexId u1 = m.domain.find_vertex("u1"), u2 = m.domain.find_vertex("u2");
    VertexId v1 = m.domain.find_vertex("v1"), v2 = m.domain.find_vertex("v2");
    SUBCASE("valid heights pass") {
        Lifting l;
        l.heights.assign(4, 0);
        l.heights[u1] = 1;
        l.heights[u2] = 2;
        l.heights[v1] = 1;
        l.heights[v2] = 2;
        CHECK(verify_embedding(m, l).ok);
    }
    SUBCASE("crossing heights fail with the edge pair") {
        Lifting l;
        l.heights.assign(4, 0);
        l.heights[u1] = 1;
        l.heights[u2] = 2;
        l.heights[v1] = 2;
        l.heights[v2] = 1;
        EmbeddingCheck c = verify_embedding(m, l);
        CHECK_FALSE(c.ok);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->first == m.domain.find_edge("e1"));
        CHECK(c.witness->second == m.domain.find_edge("e2"));
    }
}

TEST_CASE("brute force oracle") {
    SUBCASE("double cover has two liftings") {
        BruteForceResult r = brute_force_liftings(testutil::double_cover(), 100);
        CHECK(r.count == 2);
        CHECK(r.collections.size() == 2);
        CHECK_FALSE(r.truncated);
    }
    SUBCASE("three isolated points have six") {
        CHECK(brute_force_liftings(testutil::three_isolated(), 100).count == 6);
    }
    SUBCASE("sieklucki has none") {
        GraphMap r = restrict_multiple(testutil::sieklucki());
        CHECK(brute_force_liftings(r, 10, 1e9).count == 0);
    }
    SUBCASE("bound is enforced") {
        CHECK_THROWS_AS(brute_force_liftings(testutil::sieklucki(), 10, 100.0),
                        resource_limit_error);
    }
    SUBCASE("list is canonically ordered and capped") {
        BruteForceResult r = brute_force_liftings(testutil::three_isolated(), 2);
        CHECK(r.count == 6);
        CHECK(r.collections.size() == 2);
        CHECK(r.truncated);
        BruteForceResult full = brute_force_liftings(testutil::three_isolated(), 100);
        CHECK(std::is_sorted(full.collections.begin(), full.collections.end(),
                             [](const OrderCollection& a, const OrderCollection& b) {
                                 return a.fiber_order < b.fiber_order;
                             }));
        CHECK(r.collections[0].fiber_order == full.collections[0].fiber_order);
        CHECK(r.collections[1].fiber_order == full.collections[1].fiber_order);
    }
}

TEST_CASE("order serialization format") {
    GraphMap m = testutil::double_cover();
    GammaFormula g = build_gamma(m);
    OrderCollection o = assignment_to_orders(m, g, {1});
    CHECK(serialize_orders(m, o) == "order u u1 u2\norder v v1 v2\n");
}

TEST_CASE("bijection between models and admissible collections") {
    std::mt19937_64 rng(401);
    int built = 0;
    while (built < 80) {
        GraphMap m = built % 2 ? testutil::random_map(rng)
                               : testutil::random_map(rng, testutil::dense_loop_params());
        if (!p_trivial(m, 2)) continue;
        ++built;
        GammaFormula g = build_gamma(m);
        ModelList ml = enumerate_models(g, 1 << 20);
        REQUIRE_FALSE(ml.truncated);
        BruteForceResult bf = brute_force_liftings(m, 1 << 20);
        CHECK(ml.models.size() == bf.count);
        std::set<std::vector<std::vector<VertexId>>> from_models;
        for (const Assignment& a : ml.models) {
            OrderCollection o = assignment_to_orders(m, g, a);
            AdmissibleCheck adm = is_admissible(m, o);
            CHECK(adm.ok);
            from_models.insert(flatten(o));
        }
        CHECK(from_models.size() == ml.models.size());
        std::set<std::vector<std::vector<VertexId>>> from_oracle;
        for (const OrderCollection& o : bf.collections) from_oracle.insert(flatten(o));
        CHECK(from_models == from_oracle);
    }
}

TEST_CASE("soundness and completeness against the oracle") {
    std::mt19937_64 rng(402);
    for (int i = 0; i < 60; ++i) {
        GraphMap m = testutil::random_map(rng);
        BruteForceResult bf = brute_force_liftings(m, 4);
        if (!p_trivial(m, 2)) {
            // a nontrivial pair covering already forbids lifting
            CHECK(bf.count == 0);
            continue;
        }
        GammaFormula g = build_gamma(m);
        bool sat = solve(g).has_value();
        CHECK(sat == (bf.count > 0));
        for (const OrderCollection& o : bf.collections) {
            Lifting l = orders_to_lifting(m, o);
            CHECK(verify_embedding(m, l).ok);
        }
    }
}
