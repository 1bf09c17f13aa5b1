#include <doctest.h>

#include "supercluster/errors.hpp"
#include "supercluster/quiver.hpp"
#include "supercluster/random.hpp"

using namespace supercluster;

TEST_CASE("validation") {
    ExtendedQuiver q(2, 0);
    q.set_arrows(0, 1, 1);
    CHECK(is_valid(q));

    ExtendedQuiver bad(2, 0);
    bad.set_entry(0, 1, 1);
    bad.set_entry(1, 0, 1);
    CHECK_FALSE(is_valid(bad));
    CHECK(validate(bad).size() == 1);

    ExtendedQuiver loop(2, 0);
    loop.set_entry(1, 1, 3);
    CHECK_FALSE(is_valid(loop));

    ExtendedQuiver paths(1, 2);
    CHECK_THROWS_AS(paths.set_path(1, 0, 0, 1), InvalidQuiver);
    CHECK_THROWS_AS(paths.set_path(0, 2, 0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"n":1,"m":2,"b":[[0]],"paths":[{"i":2,"j":1,"k":1,"mult":1}]})")),
                    InvalidQuiver);
}

TEST_CASE("mutation of the two-vertex example with 2-paths") {
    const ExtendedQuiver q = build_a2_paths();
    const ExtendedQuiver r = mutate(q, 0);
    CHECK(r.b(0, 1) == -1);
    CHECK(r.path(0, 1, 0) == -1);
    CHECK(r.path(0, 1, 1) == 2);
    CHECK(weight_function(q) == WeightFunction{1, 1});
    CHECK(weight_function(r) == WeightFunction{-1, 2});

    const ExtendedQuiver rr = mutate(r, 0);
    CHECK(rr.b(0, 1) == 1);
    CHECK(rr.path(0, 1, 0) == 1);
    CHECK(rr.path(0, 1, 1) == 2);
}

TEST_CASE("mutation without 2-paths is classical") {
    const ExtendedQuiver q = build_a2();
    const ExtendedQuiver r = mutate(q, 0);
    CHECK(r.paths().empty());
    CHECK(r.b(0, 1) == -1);
    CHECK_THROWS_AS(mutate(q, 2), IndexOutOfRange);
    CHECK_THROWS_AS(mutate(build_osp_example(), 1), FrozenVertex);
}

TEST_CASE("three-vertex classical mutation") {
    // x1 -> x2 -> x3; mutating at x2 adds x1 -> x3 and reverses the two arrows.
    ExtendedQuiver q(3, 0);
    q.set_arrows(0, 1, 1);
    q.set_arrows(1, 2, 1);
    const ExtendedQuiver r = mutate(q, 1);
    CHECK(r.b(0, 1) == -1);
    CHECK(r.b(1, 2) == -1);
    CHECK(r.b(0, 2) == 1);
    CHECK(r.b(2, 0) == -1);
}

TEST_CASE("Somos-4 quivers") {
    const ExtendedQuiver a = build_somos4_a();
    const ExtendedQuiver b = build_somos4_b();
    CHECK(is_valid(a));
    CHECK(is_valid(b));
    CHECK(weight_function(a) == WeightFunction{1, 0, 0, -1});
    CHECK(weight_function(b) == WeightFunction{1, 1, -1, -1});
    CHECK(weight_function(mutate(a, 0)) == WeightFunction{-1, 1, 0, 0});
    CHECK(mutate_weight(weight_function(a), a, 0) == WeightFunction{-1, 1, 0, 0});
    CHECK(is_period_one(a, 0, cyclic_shift(4)));
    CHECK(is_period_one(b, 0, cyclic_shift(4)));
    CHECK_FALSE(is_period_one(build_a2(), 0, {0, 1}));
}

TEST_CASE("weight function") {
    CHECK(weight_function(build_a2_paths()) == WeightFunction{1, 1});
    ExtendedQuiver plain(3, 2);
    CHECK(weight_function(plain) == WeightFunction{0, 0, 0});
    CHECK_THROWS_AS(weight_function(build_aquiv(2)), RequiresTwoOddVertices);
    CHECK(mutate_weight({1, 1}, build_a2_paths(), 0) == WeightFunction{-1, 2});
    ExtendedQuiver q(3, 2);
    q.set_arrows(0, 1, 1);
    q.set_arrows(0, 2, 2);
    CHECK(mutate_weight({0, 3, -2}, q, 0) == WeightFunction{0, 3, -2});
}

TEST_CASE("named builders") {
    const ExtendedQuiver osp = build_named("osp_example");
    CHECK(osp.n() == 3);
    CHECK(osp.m() == 2);
    CHECK(osp.b(0, 1) == 1);
    CHECK(osp.b(0, 2) == 1);
    CHECK(osp.b(1, 2) == 0);
    CHECK(osp.path(0, 1, 0) == -1);
    CHECK(osp.is_frozen(1));
    CHECK(osp.is_frozen(2));
    CHECK_FALSE(osp.is_frozen(0));

    const ExtendedQuiver a1 = build_named("aquiv(1)");
    CHECK(a1.n() == 1);
    CHECK(a1.m() == 2);
    CHECK(a1.paths().size() == 1);
    CHECK(a1.path(0, 1, 0) == -1);

    const ExtendedQuiver a3 = build_named("aquiv3");
    CHECK(a3.n() == 3);
    CHECK(a3.m() == 4);
    CHECK(a3.b(0, 1) == 1);
    CHECK(a3.b(1, 2) == 1);
    CHECK(a3.path(1, 2, 1) == -1);
    CHECK(a3.path(0, 1, 1) == 1);
    CHECK_THROWS_AS(build_named("pentagon"), UnknownName);
    CHECK_THROWS_AS(build_named("aquiv(0)"), InvalidQuiver);
}

TEST_CASE("json round trip") {
    for (const char* name : {"somos4_a", "somos4_b", "osp_example", "a2", "a2_paths", "aquiv(3)"}) {
        const ExtendedQuiver q = build_named(name);
        const Json j = quiver_to_json(q);
        CHECK(quiver_from_json(j) == q);
        CHECK(quiver_from_json(Json::parse(j.dump())) == q);
    }
    const Json j = quiver_to_json(build_a2_paths());
    CHECK(j["paths"][0] == Json::parse(R"({"i":1,"j":2,"k":1,"mult":1})"));
    CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"n":2,"b":[[0,1]]})")), ParseError);
    CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"n":1,"b":[[0]],"frozen":[2]})")), ParseError);
}

TEST_CASE("property: mutation invariants on random quivers") {
    Rng rng(2024);
    RandomQuiverParams params;
    params.max_b = 3;
    params.max_c = 3;
    for (int trial = 0; trial < 300; ++trial) {
        const ExtendedQuiver q = random_quiver(rng, params);
        REQUIRE(is_valid(q));
        for (std::size_t k = 0; k < q.n(); ++k) {
            const ExtendedQuiver r = mutate(q, k);
            CHECK(is_valid(r));
            const ExtendedQuiver rr = mutate(r, k);
            for (std::size_t i = 0; i < q.n(); ++i) {
                for (std::size_t j = 0; j < q.n(); ++j) CHECK(rr.b(i, j) == q.b(i, j));
            }
            // c''(i,j,l) = c(i,j,l) + b_kl c(i,j,k) for l != k, and c''(i,j,k) = c(i,j,k).
            for (std::size_t i = 0; i < q.m(); ++i) {
                for (std::size_t j = i + 1; j < q.m(); ++j) {
                    for (std::size_t l = 0; l < q.n(); ++l) {
                        const std::int64_t expected =
                            l == k ? q.path(i, j, k) : q.path(i, j, l) + q.b(k, l) * q.path(i, j, k);
                        CHECK(rr.path(i, j, l) == expected);
                    }
                }
            }
            if (q.m() == 2) CHECK(mutate_weight(weight_function(q), q, k) == weight_function(r));
        }
    }
}

TEST_CASE("random generation is deterministic") {
    Rng a(instance_seed(7, 3));
    Rng b(instance_seed(7, 3));
    RandomQuiverParams params;
    for (int i = 0; i < 20; ++i) {
        const ExtendedQuiver qa = random_quiver(a, params);
        CHECK(qa == random_quiver(b, params));
        CHECK(random_sequence(a, qa, 8) == random_sequence(b, qa, 8));
    }
    CHECK(instance_seed(7, 3) != instance_seed(7, 4));
    CHECK(instance_seed(7, 3) != instance_seed(8, 3));
}
