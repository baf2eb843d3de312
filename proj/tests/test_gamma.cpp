#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "graphlift/errors.hpp"
#include "graphlift/gamma.hpp"
#include "testutil.hpp"

using namespace graphlift;

TEST_CASE("build_gamma shapes") {
    SUBCASE("double cover: one variable, no clauses") {
        GammaFormula g = build_gamma(testutil::double_cover());
        CHECK(g.var_count == 1);
        CHECK(g.clauses.empty());
    }
    SUBCASE("three isolated points: the two transitivity clauses") {
        GammaFormula g = build_gamma(testutil::three_isolated());
        CHECK(g.var_count == 3);
        // The six ordered triples collapse to the two acyclicity clauses.
        std::vector<Clause> expected{{-1, 2, -3}, {1, -2, 3}};
        std::sort(expected.begin(), expected.end());
        std::vector<Clause> got = g.clauses;
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
    SUBCASE("undefined when the pair covering is nontrivial") {
        CHECK_THROWS_AS(build_gamma(testutil::sieklucki()), gamma_undefined_error);
    }
    SUBCASE("realized instance carries exactly the eight sign patterns") {
        GammaFormula g = build_gamma(testutil::nontrivial_gamma());
        CHECK(g.var_count == 3);
        REQUIRE(g.clauses.size() == 8);
        std::set<Clause> got(g.clauses.begin(), g.clauses.end());
        std::set<Clause> expected;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) expected.insert(canonical_clause(s1, 2 * s2, 3 * s3));
        CHECK(got == expected);
    }
    SUBCASE("degenerate repeated-literal clauses from the triple cover") {
        GammaFormula g = build_gamma(testutil::c9_over_c3());
        bool has_repeat = false;
        for (const Clause& c : g.clauses)
            if (c[0] == c[1] || c[1] == c[2]) has_repeat = true;
        CHECK(has_repeat);
        CHECK_FALSE(solve(g).has_value());
    }
    SUBCASE("clause closure: the fully negated clause is always present") {
        std::mt19937_64 rng(301);
        int built = 0;
        while (built < 25) {
            GraphMap m = testutil::random_map(rng);
            if (!p_trivial(m, 2)) continue;
            ++built;
            GammaFormula g = build_gamma(m);
            std::set<Clause> set(g.clauses.begin(), g.clauses.end());
            for (const Clause& c : g.clauses)
                CHECK(set.count(canonical_clause(-c[0], -c[1], -c[2])) == 1);
        }
    }
}

TEST_CASE("solver") {
    SUBCASE("empty clause set: first model is all-false") {
        auto model = solve_clauses(3, {});
        REQUIRE(model.has_value());
        CHECK(*model == Assignment({0, 0, 0}));
    }
    SUBCASE("degenerate pair is unsatisfiable") {
        std::vector<Clause> clauses{canonical_clause(-1, -1, -1), canonical_clause(1, 1, 1)};
        CHECK_FALSE(solve_clauses(1, clauses).has_value());
    }
    SUBCASE("realized nontrivial formula is unsatisfiable") {
        CHECK_FALSE(solve(build_gamma(testutil::nontrivial_gamma())).has_value());
    }
    SUBCASE("unit propagation chains") {
        // (x1) & (x1 -> x2) & (x2 -> x3) forced by three-literal paddings
        std::vector<Clause> clauses{canonical_clause(1, 1, 1), canonical_clause(-1, -1, 2),
                                    canonical_clause(-2, -2, 3)};
        auto model = solve_clauses(3, clauses);
        REQUIRE(model.has_value());
        CHECK(*model == Assignment({1, 1, 1}));
    }
}

TEST_CASE("model enumeration") {
    SUBCASE("double cover has exactly two models") {
        ModelList ml = enumerate_models(build_gamma(testutil::double_cover()), 100);
        CHECK(ml.models.size() == 2);
        CHECK_FALSE(ml.truncated);
        // branch order: false first
        CHECK(ml.models[0] == Assignment({0}));
        CHECK(ml.models[1] == Assignment({1}));
    }
    SUBCASE("three isolated points have six models") {
        ModelList ml = enumerate_models(build_gamma(testutil::three_isolated()), 100);
        CHECK(ml.models.size() == 6);
    }
    SUBCASE("unsat formula enumerates to nothing") {
        ModelList ml = enumerate_models(build_gamma(testutil::nontrivial_gamma()), 100);
        CHECK(ml.models.empty());
        CHECK_FALSE(ml.truncated);
    }
    SUBCASE("cap truncates with a marker") {
        ModelList ml = enumerate_models_clauses(3, {}, 2);
        CHECK(ml.models.size() == 2);
        CHECK(ml.truncated);
    }
    SUBCASE("re-representing a variable preserves the model count") {
        std::mt19937_64 rng(302);
        int built = 0;
        while (built < 20) {
            GraphMap m = testutil::random_map(rng);
            if (!p_trivial(m, 2)) continue;
            GammaFormula g = build_gamma(m);
            if (g.var_count == 0) continue;
            ++built;
            std::size_t base = enumerate_models(g, 1 << 20).models.size();
            std::uniform_int_distribution<int> pick(1, g.var_count);
            int flip = pick(rng);
            std::vector<Clause> complemented;
            for (Clause c : g.clauses) {
                for (int& l : c)
                    if (std::abs(l) == flip) l = -l;
                complemented.push_back(canonical_clause(c[0], c[1], c[2]));
            }
            std::size_t flipped =
                enumerate_models_clauses(g.var_count, complemented, 1 << 20).models.size();
            CHECK(base == flipped);
        }
    }
}

TEST_CASE("nu3 closure") {
    SUBCASE("identity map: empty partition, vanishing") {
        NuPartition nu = nu3_closure(testutil::identity_path(4));
        CHECK(nu.comp_count == 0);
        CHECK(nu.log.empty());
        CHECK(nu.vanishes);
    }
    SUBCASE("realized instance: zero merges, vanishing") {
        NuPartition nu = nu3_closure(testutil::nontrivial_gamma());
        CHECK(nu.log.empty());
        CHECK(nu.vanishes);
    }
    SUBCASE("triple cover: merge fires and the invariant does not vanish") {
        NuPartition nu = nu3_closure(testutil::c9_over_c3());
        CHECK_FALSE(nu.log.empty());
        CHECK_FALSE(nu.vanishes);
    }
    SUBCASE("closure is involution-compatible and a fixpoint") {
        std::mt19937_64 rng(303);
        for (int i = 0; i < 30; ++i) {
            GraphMap m = testutil::random_map(rng);
            ConfigGraph c2 = build_config(m, 2);
            ComponentMap cm = components(c2);
            NuPartition nu = nu3_closure(m);
            const std::array<int, 2> tau{1, 0};
            ActionResult a = act(c2, cm, tau);
            for (std::int32_t x = 0; x < cm.count; ++x)
                for (std::int32_t y = 0; y < cm.count; ++y)
                    if (nu.class_of[x] == nu.class_of[y])
                        CHECK(nu.class_of[a.component_image[x]] ==
                              nu.class_of[a.component_image[y]]);
            // partition is coarser than components: class ids are component reps
            for (std::int32_t x = 0; x < cm.count; ++x) CHECK(nu.class_of[x] <= x);
            // fixpoint: no triple still wants a merge
            FiberIndex fi = fibers(m);
            std::array<VertexId, 2> pr{};
            auto cls = [&](VertexId x, VertexId y) {
                pr = {x, y};
                return nu.class_of[cm.comp_of[c2.find_tuple(pr)]];
            };
            for (const auto& fiber : fi.vertex_fibers) {
                if (fiber.size() < 3) continue;
                for (VertexId x : fiber)
                    for (VertexId y : fiber)
                        for (VertexId z : fiber) {
                            if (x == y || y == z || x == z) continue;
                            if (cls(x, y) == cls(y, z)) CHECK(cls(x, z) == cls(x, y));
                        }
            }
        }
    }
    SUBCASE("no repeated-literal clause means zero merges") {
        std::mt19937_64 rng(304);
        int built = 0;
        while (built < 25) {
            GraphMap m = testutil::random_map(rng);
            if (!p_trivial(m, 2)) continue;
            ++built;
            GammaFormula g = build_gamma(m);
            bool has_repeat = false;
            for (const Clause& c : g.clauses)
                if (c[0] == c[1] || c[1] == c[2]) has_repeat = true;
            NuPartition nu = nu3_closure(m);
            if (!has_repeat) CHECK(nu.log.empty());
        }
    }
}

TEST_CASE("mu2") {
    CHECK_FALSE(mu2_vanishes(testutil::sieklucki()));
    CHECK(mu2_vanishes(testutil::double_cover()));
    CHECK(mu2_vanishes(testutil::nontrivial_gamma()));
}
