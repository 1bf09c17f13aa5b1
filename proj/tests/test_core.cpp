#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "support.hpp"
#include "supercluster/errors.hpp"
#include "supercluster/super_rational.hpp"

using namespace supercluster;
using test_support::P;

namespace {

const Signature S24{2, 4};

// Reference product built from scratch: index lists, bubble-sort sign, std::map keyed by (list, exponents).
using RefKey = std::pair<std::vector<std::size_t>, std::vector<int>>;
using RefPoly = std::map<RefKey, Integer>;

RefPoly to_ref(const SuperLaurentPoly& p) {
    RefPoly r;
    const auto n = p.signature().even;
    for (const auto& t : p.terms()) {
        std::vector<int> x(t.xexp.begin(), t.xexp.begin() + static_cast<std::ptrdiff_t>(n));
        r[{t.odd.indices(), x}] += t.coeff;
    }
    return r;
}

RefPoly ref_mul(const RefPoly& a, const RefPoly& b) {
    RefPoly out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            std::vector<std::size_t> word = ka.first;
            word.insert(word.end(), kb.first.begin(), kb.first.end());
            int sign = 1;
            bool repeated = false;
            for (std::size_t i = 0; i < word.size(); ++i) {
                for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
                    if (word[j] == word[j + 1]) repeated = true;
                    if (word[j] > word[j + 1]) {
                        std::swap(word[j], word[j + 1]);
                        sign = -sign;
                    }
                }
            }
            for (std::size_t j = 0; j + 1 < word.size(); ++j) repeated = repeated || word[j] == word[j + 1];
            if (repeated) continue;
            std::vector<int> x(ka.second.size());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = ka.second[i] + kb.second[i];
            out[{word, x}] += sign * ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

int parity_of(const SuperLaurentPoly& p) { return p.parity() == Parity::Odd ? 1 : 0; }

} // namespace

TEST_CASE("odd generators anticommute") {
    const Signature sig{0, 4};
    CHECK(P("xi2*xi1", sig) == -P("xi1*xi2", sig));
    CHECK((P("xi1*xi2", sig) * P("xi1*xi3", sig)).is_zero());
    CHECK(P("xi1*xi2", sig) * P("xi3*xi4", sig) == P("xi1*xi2*xi3*xi4", sig));
    CHECK(P("xi1", sig) * P("xi1", sig) == SuperLaurentPoly(sig));
}

TEST_CASE("merge sign and canonical mask order") {
    const auto m = [](std::vector<std::size_t> v) { return OddMask::from_indices(v); };
    CHECK(merge_sign(m({1}), m({0})) == -1);
    CHECK(merge_sign(m({0, 2}), m({1})) == -1);
    CHECK(merge_sign(m({0, 1}), m({2, 3})) == 1);
    CHECK(merge_sign(m({2, 3}), m({0, 1})) == 1);
    CHECK(merge_sign(m({0}), m({0})) == 0);
    CHECK(canonical_less(m({}), m({0})));
    CHECK(canonical_less(m({0}), m({0, 1})));
    CHECK(canonical_less(m({0, 1}), m({1})));
    CHECK(canonical_less(m({0, 3}), m({1, 2})));
    CHECK_FALSE(canonical_less(m({1}), m({0, 1})));
    CHECK_FALSE(canonical_less(m({1}), m({1})));
}

TEST_CASE("exact division examples") {
    const Signature sig{2, 2};
    CHECK(exact_div(P("x1*x2 + x2*xi1*xi2", sig), P("x1 + xi1*xi2", sig)) == P("x2", sig));
    CHECK(exact_div(P("x1^2 - x2^2", sig), P("x1 - x2", sig)) == P("x1 + x2", sig));
    CHECK_THROWS_AS(exact_div(P("x1 + 1", sig), P("x2 + 1", sig)), NotDivisible);
    CHECK(exact_div(P("x1^-1 + x2^-1", sig), P("x1 + x2", sig)) == P("x1^-1*x2^-1", sig));
    CHECK_THROWS_AS(exact_div(P("x1", sig), P("xi1", sig)), ParityError);
    CHECK_THROWS_AS(exact_div(P("x1", sig), P("xi1*xi2", sig)), NotDivisible);
    CHECK_THROWS_AS(exact_div(P("x1", sig), P("2", sig)), NotDivisible);
}

TEST_CASE("unit inversion") {
    const Signature sig{1, 4};
    CHECK(invert_unit(P("1 + xi1*xi2", sig)) == P("1 - xi1*xi2", sig));
    CHECK(invert_unit(P("x1", sig)) == P("x1^-1", sig));
    const auto u = P("1 + xi1*xi2", sig) * P("1 + xi3*xi4", sig);
    const auto claimed = P("1 - xi1*xi2 - xi3*xi4 + xi1*xi2*xi3*xi4", sig);
    CHECK(invert_unit(u) == claimed);
    CHECK(u * claimed == P("1", sig));
    CHECK(invert_unit(P("-x1^2 + x1*xi1", sig)) * P("-x1^2 + x1*xi1", sig) == P("1", sig));
    CHECK_THROWS_AS(invert_unit(P("1 + x1", sig)), NotUnit);
    CHECK_THROWS_AS(invert_unit(P("2", sig)), NotUnit);
    CHECK_THROWS_AS(invert_unit(P("xi1*xi2", sig)), NotUnit);
}

TEST_CASE("classical projection") {
    const Signature sig{2, 4};
    CHECK(classical_projection(P("2 + xi1*xi2", sig)) == P("2", sig));
    CHECK(classical_projection(P("xi1", sig)).is_zero());
    CHECK(classical_projection(P("x1 + x2*xi1*xi2*xi3*xi4", sig)) == P("x1", sig));
}

TEST_CASE("substitution") {
    SUBCASE("single variable") {
        const Signature src{1, 0};
        const Signature dst{2, 0};
        std::vector<std::optional<SuperRational>> img{SuperRational(P("1 + x2", dst), P("x1", dst))};
        const SuperRational r = substitute(P("x1", src), img, dst);
        CHECK(equals_rational(r, SuperRational(P("1 + x2", dst), P("x1", dst))));
    }
    SUBCASE("color variable to 1 + xi1 xi2") {
        const Signature src{4, 2};
        const Signature dst{4, 2};
        std::vector<std::optional<SuperRational>> img(4);
        img[2] = SuperRational(P("x3", dst));
        img[3] = SuperRational(P("1 + xi1*xi2", dst));
        const SuperRational r = substitute(P("x4*x3", src), img, dst);
        CHECK(equals_rational(r, SuperRational(P("x3 + x3*xi1*xi2", dst))));
    }
    SUBCASE("inverse") {
        const Signature sig{3, 0};
        std::vector<std::optional<SuperRational>> img{SuperRational(P("x2 + 1", sig), P("x3 + 2", sig)),
                                                      std::nullopt, std::nullopt};
        const SuperRational r = substitute(P("x1^-1", sig), img, sig);
        CHECK(equals_rational(r, SuperRational(P("x3 + 2", sig), P("x2 + 1", sig))));
    }
    SUBCASE("missing image") {
        const Signature sig{2, 0};
        std::vector<std::optional<SuperRational>> img(2);
        img[0] = SuperRational(P("x1", sig));
        CHECK_THROWS_AS(substitute(P("x1*x2", sig), img, sig), SubstitutionError);
        CHECK_NOTHROW(substitute(P("x1 + 3", sig), img, sig));
    }
    SUBCASE("odd generators are kept") {
        const Signature sig{2, 2};
        std::vector<std::optional<SuperRational>> img{SuperRational(P("x2", sig)), SuperRational(P("x1", sig))};
        const SuperRational r = substitute(P("x1^2*xi2 + x2^-1*xi1*xi2", sig), img, sig);
        CHECK(equals_rational(r, SuperRational(P("x2^2*xi2 + x1^-1*xi1*xi2", sig))));
    }
}

TEST_CASE("rational equality") {
    const Signature sig{3, 2};
    CHECK(equals_rational(SuperRational(P("x1", sig), P("x2", sig)), SuperRational(P("x1*x3", sig), P("x2*x3", sig))));
    CHECK(equals_rational(SuperRational(P("1", sig), P("1 + xi1*xi2", sig)), SuperRational(P("1 - xi1*xi2", sig))));
    CHECK_FALSE(equals_rational(SuperRational(P("x1", sig)), SuperRational(P("x2", sig))));
    CHECK_THROWS_AS(SuperRational(P("1", sig), P("xi1", sig)), ParityError);
    CHECK_THROWS_AS(SuperRational(P("1", sig), P("xi1*xi2", sig)), NotDivisible);
}

TEST_CASE("render and parse round trip") {
    const Signature sig{2, 2};
    const auto p = P("x1^-1 + x1^-1*x2 + x1^-1*x2*xi1*xi2", sig);
    CHECK(render(p) == "x1^-1 + x1^-1*x2 + x1^-1*x2*xi1*xi2");
    CHECK(render(P("-2*x1 + 3 - xi2*xi1", sig)) == "3 - 2*x1 + xi1*xi2");
    CHECK(render(SuperLaurentPoly(sig)) == "0");
    CHECK_THROWS_AS(P("x3", sig), ParseError);
    CHECK_THROWS_AS(P("x1 +", sig), ParseError);
}

TEST_CASE("json round trip and canonical order") {
    const Signature sig{2, 3};
    const auto p = P("x2*xi3 - 5*x1^-2 + 123456789012345678901234567890*xi1*xi2 + x1*xi1*xi3", sig);
    const Json j = poly_to_json(p);
    CHECK(poly_from_json(j, sig) == p);
    CHECK(j["terms"][0]["c"] == "-5");
    CHECK(j["terms"][1]["xi"] == Json::array({1, 2}));
    CHECK(j["terms"][1]["c"] == "123456789012345678901234567890");
    CHECK(j["terms"][2]["xi"] == Json::array({1, 3}));
    CHECK(j["terms"][3]["xi"] == Json::array({3}));
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[{"c":"1","x":[0]}]})"), sig), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[{"c":"1.5","x":[0,0]}]})"), sig), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[{"c":"1","x":[0,0],"xi":[2,1]}]})"), sig), ParseError);
}

TEST_CASE("signature mismatch") {
    CHECK_THROWS_AS(P("x1", Signature{1, 0}) * P("x1", Signature{2, 0}), SignatureError);
    CHECK_THROWS_AS(P("x1", Signature{1, 0}) + P("x1", Signature{1, 1}), SignatureError);
}

TEST_CASE("property: product agrees with reference implementation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = test_support::random_poly(rng, S24, 6);
        const auto b = test_support::random_poly(rng, S24, 6);
        CHECK(to_ref(a * b) == ref_mul(to_ref(a), to_ref(b)));
    }
}

TEST_CASE("property: associativity and graded commutativity") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = test_support::random_poly(rng, S24, 5);
        const auto b = test_support::random_poly(rng, S24, 5);
        const auto c = test_support::random_poly(rng, S24, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // Split into homogeneous parts before comparing commutators.
        {
            std::vector<SuperComponent> ev, od;
            for (const auto& comp : a.components()) (comp.mask.is_even() ? ev : od).push_back(comp);
            const auto ae = SuperLaurentPoly::from_components(S24, ev);
            const auto ao = SuperLaurentPoly::from_components(S24, od);
            std::vector<SuperComponent> bev, bod;
            for (const auto& comp : b.components()) (comp.mask.is_even() ? bev : bod).push_back(comp);
            const auto be = SuperLaurentPoly::from_components(S24, bev);
            const auto bo = SuperLaurentPoly::from_components(S24, bod);
            for (const auto& x : {ae, ao}) {
                for (const auto& y : {be, bo}) {
                    const int sign = (parity_of(x) * parity_of(y)) ? -1 : 1;
                    CHECK(x * y == (y * x).scaled(sign));
                }
            }
        }
    }
}

TEST_CASE("property: nilpotent part is nilpotent") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = test_support::random_poly(rng, S24, 6);
        CHECK(p.nilpotent_part().pow(static_cast<unsigned>(S24.odd / 2 + 1)).is_zero());
        // A single odd element squares to zero.
        std::vector<SuperComponent> od;
        for (const auto& comp : p.components()) {
            if (!comp.mask.is_even()) od.push_back(comp);
        }
        const auto o = SuperLaurentPoly::from_components(S24, od);
        CHECK((o * o).is_zero());
    }
}

TEST_CASE("property: exact division round trip") {
    std::mt19937_64 rng(14);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = test_support::random_poly(rng, S24, 5);
        auto q = test_support::random_even_poly(rng, S24, 4);
        if (q.body().is_zero()) q += P("x1 + 2", S24);
        CHECK(exact_div(r * q, q) == r);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("property: commutative division rejects non-multiples") {
    std::mt19937_64 rng(15);
    const Signature sig{3, 0};
    for (int trial = 0; trial < 100; ++trial) {
        const auto q = P("x1 + x2 + 1", sig);
        const auto r = test_support::random_poly(rng, sig, 4);
        const auto p = r * q + P("x3", sig);
        CHECK_THROWS_AS(exact_div(p, q), NotDivisible);
    }
}

TEST_CASE("property: unit inversion round trip") {
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<int> expo(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Exponents a{};
        for (std::size_t i = 0; i < S24.even; ++i) a[i] = expo(rng);
        const int c = trial % 2 ? 1 : -1;
        const auto n = test_support::random_poly(rng, S24, 5).nilpotent_part();
        const auto u = SuperLaurentPoly::monomial(S24, a, OddMask{}, c) * (P("1", S24) + n);
        CHECK(u * invert_unit(u) == P("1", S24));
        CHECK(invert_unit(u) * u == P("1", S24));
    }
}

TEST_CASE("property: classical projection is a ring homomorphism") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = test_support::random_poly(rng, S24, 6);
        const auto b = test_support::random_poly(rng, S24, 6);
        CHECK(classical_projection(a * b) == classical_projection(a) * classical_projection(b));
        CHECK(classical_projection(a + b) == classical_projection(a) + classical_projection(b));
    }
}

TEST_CASE("property: substitution is a homomorphism") {
    std::mt19937_64 rng(18);
    const Signature sig{2, 2};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::optional<SuperRational>> img;
        for (int i = 0; i < 2; ++i) {
            auto num = test_support::random_even_poly(rng, sig, 3, 0, 2);
            if (num.body().is_zero()) num += P("1", sig);
            auto den = test_support::random_even_poly(rng, sig, 2, 0, 2);
            if (den.body().is_zero()) den += P("x1", sig);
            img.emplace_back(SuperRational(num, den));
        }
        const auto a = test_support::random_poly(rng, sig, 4);
        const auto b = test_support::random_poly(rng, sig, 4);
        const auto sa = substitute(a, img, sig);
        const auto sb = substitute(b, img, sig);
        CHECK(equals_rational(substitute(a * b, img, sig), sa * sb));
        CHECK(equals_rational(substitute(a + b, img, sig), sa + sb));
    }
}
