#include <doctest.h>

#include "support.hpp"
#include "supercluster/colored.hpp"
#include "supercluster/errors.hpp"
#include "supercluster/random.hpp"

using namespace supercluster;
using test_support::P;

TEST_CASE("pair numbering") {
    const ColoredQuiver cq(2, 4);
    CHECK(cq.size() == 8);
    CHECK(cq.y_vertex(0, 1) == 2);
    CHECK(cq.y_vertex(0, 3) == 4);
    CHECK(cq.y_vertex(1, 2) == 5);
    CHECK(cq.y_vertex(2, 3) == 7);
    for (std::size_t v = 2; v < 8; ++v) {
        const auto [i, j] = cq.pair_of(v);
        CHECK(cq.y_vertex(i, j) == v);
    }
    CHECK(ColoredQuiver(3, 1).size() == 3);
    CHECK(cq.is_frozen(5));
    CHECK_THROWS_AS(cq.y_vertex(1, 1), IndexOutOfRange);
}

TEST_CASE("translation to colored quivers") {
    const ColoredQuiver a = to_colored(build_a2_paths());
    const std::size_t y = a.y_vertex(0, 1);
    CHECK(a.arrows(y, 0) == 1);
    CHECK(a.arrows(y, 1) == 1);
    CHECK(a.arrows(0, 1) == 1);

    const ColoredQuiver plain = to_colored(build_a2());
    CHECK(plain.size() == 2);

    const ColoredQuiver s = to_colored(build_somos4_a());
    const std::size_t ys = s.y_vertex(0, 1);
    CHECK(s.arrows(ys, 0) == 1);
    CHECK(s.arrows(3, ys) == 1);
    CHECK(s.arrows(ys, 1) == 0);
    CHECK(s.arrows(ys, 2) == 0);

    const ColoredQuiver osp = to_colored(build_osp_example());
    CHECK(osp.is_frozen(1));
    CHECK(osp.arrows(0, osp.y_vertex(0, 1)) == 1);
}

TEST_CASE("round trip through colored quivers") {
    for (const char* name : {"somos4_a", "somos4_b", "osp_example", "a2", "a2_paths", "aquiv(3)"}) {
        const ExtendedQuiver q = build_named(name);
        CHECK(from_colored(to_colored(q)) == q);
        CHECK(colored_from_json(colored_to_json(to_colored(q))) == to_colored(q));
    }
    CHECK(from_colored(ColoredQuiver(0, 0)) == ExtendedQuiver(0, 0));

    ColoredQuiver bad(1, 3);
    bad.set_arrows(bad.y_vertex(0, 1), bad.y_vertex(0, 2), 1);
    CHECK_THROWS_AS(from_colored(bad), MalformedColoredQuiver);
    ColoredQuiver skew(2, 0);
    skew.set_entry(0, 1, 1);
    CHECK_THROWS_AS(from_colored(skew), MalformedColoredQuiver);
    CHECK_THROWS_AS(colored_from_json(Json::parse(R"({"n":1,"m":0,"arrows":[[0,0]]})")), ParseError);

    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const ExtendedQuiver q = random_quiver(rng, RandomQuiverParams{});
        CHECK(from_colored(to_colored(q)) == q);
    }
}

TEST_CASE("monomial transform on the three-step picture") {
    // x1 = x_m, x2 = x_k, x3 = x_l; y12 = y_i, y13 = y_j.
    ColoredQuiver cq(3, 3);
    const std::size_t yi = cq.y_vertex(0, 1);
    const std::size_t yj = cq.y_vertex(0, 2);
    cq.set_arrows(yi, 1, 1);
    cq.set_arrows(0, 1, 1);
    cq.set_arrows(1, 2, 1);
    cq.set_arrows(1, yj, 1);
    const MonomialTransform t = monomial_transform(cq, 1);
    CHECK(t.quiver.arrows(0, yi) == 1);
    CHECK(t.quiver.arrows(yi, 2) == 1);
    CHECK(t.quiver.arrows(yi, 1) == 1);
    CHECK(t.quiver.arrows(1, yj) == 1);
    CHECK(t.quiver.arrows(0, yj) == 0);
    REQUIRE(t.divisors.size() == 1);
    CHECK(t.divisors[0] == std::pair<std::size_t, std::int64_t>{yi, 1});

    // No ingoing y: nothing changes.
    const MonomialTransform id = monomial_transform(cq, 2);
    CHECK(id.quiver == cq);
    CHECK(id.divisors.empty());

    // somos4_a at x1: y -> x1 with x1 -> x2 and x1 -> x4, x3 -> x1 twice.
    const ColoredQuiver s = to_colored(build_somos4_a());
    const std::size_t y = s.y_vertex(0, 1);
    const MonomialTransform ts = monomial_transform(s, 0);
    CHECK(ts.quiver.arrows(y, 1) == 1);
    CHECK(ts.quiver.arrows(y, 3) == s.arrows(y, 3) + 1);
    CHECK(ts.quiver.arrows(2, y) == 2);
    CHECK(ts.divisors.size() == 1);
}

TEST_CASE("colored mutation drops arrows between y vertices") {
    ColoredQuiver cq(1, 3);
    cq.set_arrows(cq.y_vertex(0, 1), 0, 1);
    cq.set_arrows(0, cq.y_vertex(0, 2), 1);
    const ColoredQuiver r = colored_mutate(cq, 0);
    CHECK(r.arrows(cq.y_vertex(0, 1), cq.y_vertex(0, 2)) == 0);
    CHECK(r.arrows(0, cq.y_vertex(0, 1)) == 1);
    CHECK_THROWS_AS(colored_mutate(cq, 1), IndexOutOfRange);
}

TEST_CASE("oracle exchange") {
    const Seed osp(build_osp_example());
    const Signature sig = osp.signature();
    const VariableNames names = osp.quiver().display_names();
    CHECK(oracle_mutate(osp, 0) == parse_poly("a^-1 + a^-1*b*c + a^-1*beta*alpha", sig, names));
    CHECK_THROWS_AS(oracle_mutate(osp, 1), FrozenVertex);

    const Seed a2(build_a2());
    CHECK(oracle_mutate(a2, 0) == P("x1^-1 + x1^-1*x2", a2.signature()));

    std::vector<SuperLaurentPoly> ones(4, SuperLaurentPoly::constant(Signature{4, 2}, 1));
    const Seed unit(build_somos4_a(), ones);
    CHECK(render_dual(oracle_mutate(unit, 0)) == "2+ε");

    // c(1,2,1) = -1 needs the transform's y division.
    const ExtendedQuiver neg = mutate(build_a2_paths(), 0);
    const Seed s = mutate_seed(Seed(build_a2_paths()), 0);
    CHECK(oracle_mutate(Seed(neg), 0) == mutate_seed(Seed(neg), 0).cluster(0));
    CHECK(oracle_mutate(s, 0) == mutate_seed(s, 0).cluster(0));
}

TEST_CASE("reduction holds on the builders") {
    for (const char* name : {"somos4_a", "somos4_b", "osp_example", "a2", "a2_paths", "aquiv(1)", "aquiv(3)"}) {
        const ExtendedQuiver q = build_named(name);
        for (std::size_t k = 0; k < q.n(); ++k) {
            if (q.is_frozen(k)) continue;
            CAPTURE(name);
            CAPTURE(k);
            CHECK(check_reduction(q, k));
        }
    }
}

TEST_CASE("single-y reading fails once two y vertices point out of x_k") {
    ExtendedQuiver q(2, 3);
    q.set_arrows(0, 1, 1);
    q.set_path(0, 1, 0, -1);
    q.set_path(0, 2, 0, -1);
    CHECK(check_reduction(q, 0, TransformReading::All));
    CHECK_FALSE(check_reduction(q, 0, TransformReading::First));
    // With one y the readings agree.
    CHECK(check_reduction(build_a2_paths(), 0, TransformReading::First));
}

TEST_CASE("property: colored seeds track super seeds") {
    RandomQuiverParams params;
    params.max_n = 4;
    params.max_m = 3;
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        const FuzzInstance inst = fuzz_instance(31, trial, params, 5, 20.0);
        Seed s(inst.quiver);
        ColoredSeed cs = initial_colored_seed(inst.quiver);
        for (std::size_t k : inst.sequence) {
            CHECK(check_reduction(s.quiver(), k));
            const SuperLaurentPoly oracle = oracle_mutate(s, k);
            s = mutate_seed(s, k);
            CHECK(oracle == s.cluster(k));
            cs = mutate_colored_seed(cs, k);
            CHECK(cs.quiver == to_colored(s.quiver()));
        }
        CHECK(specialize(cs) == s.cluster());
    }
}
