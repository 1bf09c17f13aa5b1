#include "supercluster/colored.hpp"

#include <optional>
#include <string>

#include "supercluster/errors.hpp"
#include "supercluster/super_rational.hpp"

namespace supercluster {

namespace {

SuperLaurentPoly odd_pair_unit(Signature sig, std::size_t i, std::size_t j) {
    return SuperLaurentPoly::constant(sig, 1) + SuperLaurentPoly::odd_var(sig, i) * SuperLaurentPoly::odd_var(sig, j);
}

void check_mutable(const ColoredQuiver& cq, std::size_t k) {
    if (k >= cq.n()) throw IndexOutOfRange("even vertex " + std::to_string(k + 1) + " out of range");
    if (cq.is_frozen(k)) throw FrozenVertex("vertex " + std::to_string(k + 1) + " is frozen");
}

// Images x_l -> cluster(l) (or x_l itself) and y_ij -> 1 + xi_i xi_j.
std::vector<std::optional<SuperRational>> colored_images(const ColoredQuiver& cq,
                                                         const std::vector<SuperLaurentPoly>* cluster) {
    const Signature sig{cq.n(), cq.m()};
    std::vector<std::optional<SuperRational>> images;
    for (std::size_t l = 0; l < cq.n(); ++l) {
        images.emplace_back(SuperRational(cluster ? (*cluster)[l] : SuperLaurentPoly::even_var(sig, l)));
    }
    for (std::size_t v = cq.n(); v < cq.size(); ++v) {
        const auto [i, j] = cq.pair_of(v);
        images.emplace_back(SuperRational(odd_pair_unit(sig, i, j)));
    }
    return images;
}

SuperLaurentPoly to_polynomial(const SuperRational& r) {
    const SuperRational s = r.simplified();
    if (!(s.den() == SuperLaurentPoly::constant(s.signature(), 1))) throw NotDivisible("value is not a Laurent polynomial");
    return s.num();
}

// The two monomials of the classical exchange at k, in the ring variables of cq.
std::pair<Exponents, Exponents> exchange_monomials(const ColoredQuiver& cq, std::size_t k) {
    Exponents out{}, in{};
    for (std::size_t v = 0; v < cq.size(); ++v) {
        const std::int64_t a = cq.arrows(k, v);
        if (a > 0) out[v] = static_cast<std::int32_t>(a);
        if (a < 0) in[v] = static_cast<std::int32_t>(-a);
    }
    return {out, in};
}

} // namespace

ColoredQuiver::ColoredQuiver(std::size_t n, std::size_t m) : n_(n), m_(m) {
    if (size() > kMaxEven) throw SignatureError("colored quiver needs more than 16 ring variables");
    a_.assign(size() * size(), 0);
    frozen_.assign(n, false);
}

void ColoredQuiver::check_vertex(std::size_t v) const {
    if (v >= size()) throw IndexOutOfRange("colored vertex " + std::to_string(v + 1) + " out of range");
}

std::size_t ColoredQuiver::y_vertex(std::size_t i, std::size_t j) const {
    if (i >= j || j >= m_) throw IndexOutOfRange("odd pair out of range");
    return n_ + i * m_ - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> ColoredQuiver::pair_of(std::size_t v) const {
    check_vertex(v);
    if (v < n_) throw IndexOutOfRange("vertex " + std::to_string(v + 1) + " is not a y vertex");
    std::size_t p = v - n_;
    for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t row = m_ - i - 1;
        if (p < row) return {i, i + 1 + p};
        p -= row;
    }
    throw IndexOutOfRange("odd pair out of range");
}

std::int64_t ColoredQuiver::arrows(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return a_[u * size() + v];
}

void ColoredQuiver::set_arrows(std::size_t u, std::size_t v, std::int64_t count) {
    check_vertex(u);
    check_vertex(v);
    a_[u * size() + v] = count;
    a_[v * size() + u] = -count;
}

void ColoredQuiver::add_arrows(std::size_t u, std::size_t v, std::int64_t count) {
    set_arrows(u, v, arrows(u, v) + count);
}

void ColoredQuiver::set_entry(std::size_t u, std::size_t v, std::int64_t value) {
    check_vertex(u);
    check_vertex(v);
    a_[u * size() + v] = value;
}

bool ColoredQuiver::is_frozen(std::size_t v) const {
    check_vertex(v);
    return v >= n_ || frozen_[v];
}

void ColoredQuiver::set_frozen(std::size_t k, bool frozen) {
    check_vertex(k);
    if (k >= n_) throw IndexOutOfRange("y vertices are always frozen");
    frozen_[k] = frozen;
}

ColoredQuiver to_colored(const ExtendedQuiver& q) {
    ColoredQuiver cq(q.n(), q.m());
    for (std::size_t i = 0; i < q.n(); ++i) {
        cq.set_frozen(i, q.is_frozen(i));
        for (std::size_t j = 0; j < q.n(); ++j) cq.set_entry(i, j, q.b(i, j));
    }
    for (const auto& [key, mult] : q.paths()) cq.add_arrows(cq.y_vertex(key.i, key.j), key.k, mult);
    return cq;
}

ExtendedQuiver from_colored(const ColoredQuiver& cq) {
    for (std::size_t u = 0; u < cq.size(); ++u) {
        if (cq.arrows(u, u) != 0) throw MalformedColoredQuiver("loop at colored vertex " + std::to_string(u + 1));
        for (std::size_t v = 0; v < cq.size(); ++v) {
            if (cq.arrows(u, v) != -cq.arrows(v, u)) throw MalformedColoredQuiver("arrow matrix is not skew-symmetric");
            if (cq.is_y(u) && cq.is_y(v) && cq.arrows(u, v) != 0) {
                throw MalformedColoredQuiver("arrow between two y vertices");
            }
        }
    }
    ExtendedQuiver q(cq.n(), cq.m());
    for (std::size_t i = 0; i < cq.n(); ++i) {
        q.set_frozen(i, cq.is_frozen(i));
        for (std::size_t j = i + 1; j < cq.n(); ++j) q.set_arrows(i, j, cq.arrows(i, j));
    }
    for (std::size_t v = cq.n(); v < cq.size(); ++v) {
        const auto [i, j] = cq.pair_of(v);
        for (std::size_t k = 0; k < cq.n(); ++k) q.set_path(i, j, k, cq.arrows(v, k));
    }
    return q;
}

ColoredQuiver colored_mutate(const ColoredQuiver& cq, std::size_t k) {
    check_mutable(cq, k);
    ColoredQuiver r = cq;
    const std::size_t N = cq.size();
    for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t v = 0; v < N; ++v) {
            if (u == k || v == k) {
                r.set_entry(u, v, -cq.arrows(u, v));
                continue;
            }
            if (cq.is_y(u) && cq.is_y(v)) continue;
            const std::int64_t uk = cq.arrows(u, k);
            const std::int64_t kv = cq.arrows(k, v);
            std::int64_t add = 0;
            if (uk > 0 && kv > 0) add = uk * kv;
            if (uk < 0 && kv < 0) add = -uk * kv;
            r.set_entry(u, v, cq.arrows(u, v) + add);
        }
    }
    return r;
}

MonomialTransform monomial_transform(const ColoredQuiver& cq, std::size_t k, TransformReading reading) {
    if (k >= cq.n()) throw IndexOutOfRange("even vertex " + std::to_string(k + 1) + " out of range");
    MonomialTransform t{cq, {}};
    for (std::size_t y = cq.n(); y < cq.size(); ++y) {
        const std::int64_t mult = cq.arrows(y, k);
        if (mult <= 0) continue;
        for (std::size_t l = 0; l < cq.n(); ++l) {
            const std::int64_t b = cq.arrows(k, l);
            if (b > 0) t.quiver.add_arrows(y, l, mult * b);
            if (b < 0) t.quiver.add_arrows(l, y, mult * -b);
        }
        t.divisors.emplace_back(y, mult);
        if (reading == TransformReading::First) break;
    }
    return t;
}

SuperLaurentPoly oracle_mutate(const Seed& s, std::size_t k, TransformReading reading) {
    const ColoredQuiver cq = to_colored(s.quiver());
    check_mutable(cq, k);
    const Signature sig = s.signature();
    const std::size_t N = cq.size();

    const auto [out, in] = exchange_monomials(cq, k);
    const LaurentPoly binomial = LaurentPoly::monomial(N, out) + LaurentPoly::monomial(N, in);
    const auto images = colored_images(cq, &s.cluster());
    const SuperLaurentPoly e = to_polynomial(
        substitute(SuperLaurentPoly::from_body(Signature{N, 0}, binomial), images, sig));

    SuperLaurentPoly divisor = s.cluster(k);
    for (const auto& [y, mult] : monomial_transform(colored_mutate(cq, k), k, reading).divisors) {
        const auto [i, j] = cq.pair_of(y);
        divisor *= odd_pair_unit(sig, i, j).pow(static_cast<unsigned>(mult));
    }
    return exact_div(e, divisor);
}

bool check_reduction(const ExtendedQuiver& q, std::size_t k, TransformReading reading) {
    const Seed s(q);
    try {
        if (!(mutate_seed(s, k).cluster(k) == oracle_mutate(s, k, reading))) return false;
        const ColoredQuiver cq = monomial_transform(colored_mutate(to_colored(q), k), k, reading).quiver;
        return from_colored(cq) == mutate(q, k);
    } catch (const NotDivisible&) {
        return false;
    } catch (const MalformedColoredQuiver&) {
        return false;
    }
}

ColoredSeed initial_colored_seed(const ExtendedQuiver& q) {
    ColoredSeed s{to_colored(q), {}};
    for (std::size_t l = 0; l < q.n(); ++l) s.cluster.push_back(LaurentPoly::variable(s.quiver.size(), l));
    return s;
}

ColoredSeed mutate_colored_seed(const ColoredSeed& s, std::size_t k, TransformReading reading) {
    check_mutable(s.quiver, k);
    const std::size_t N = s.quiver.size();
    auto value = [&](std::size_t v) {
        return v < s.quiver.n() ? s.cluster[v] : LaurentPoly::variable(N, v);
    };
    LaurentPoly out = LaurentPoly::constant(N, 1);
    LaurentPoly in = LaurentPoly::constant(N, 1);
    for (std::size_t v = 0; v < N; ++v) {
        const std::int64_t a = s.quiver.arrows(k, v);
        if (a > 0) out = out * value(v).pow(static_cast<unsigned>(a));
        if (a < 0) in = in * value(v).pow(static_cast<unsigned>(-a));
    }
    ColoredSeed r = s;
    const MonomialTransform t = monomial_transform(colored_mutate(s.quiver, k), k, reading);
    r.quiver = t.quiver;
    Exponents shift{};
    for (const auto& [y, mult] : t.divisors) shift[y] -= static_cast<std::int32_t>(mult);
    r.cluster[k] = divide_exact(out + in, s.cluster[k]).shifted(shift);
    return r;
}

std::vector<SuperLaurentPoly> specialize(const ColoredSeed& s) {
    const std::size_t N = s.quiver.size();
    const Signature sig{s.quiver.n(), s.quiver.m()};
    const auto images = colored_images(s.quiver, nullptr);
    std::vector<SuperLaurentPoly> values;
    for (const auto& c : s.cluster) {
        values.push_back(to_polynomial(substitute(SuperLaurentPoly::from_body(Signature{N, 0}, c), images, sig)));
    }
    return values;
}

Json colored_to_json(const ColoredQuiver& cq) {
    Json vertices = Json::array();
    for (std::size_t v = 0; v < cq.size(); ++v) {
        if (cq.is_y(v)) {
            const auto [i, j] = cq.pair_of(v);
            vertices.push_back({{"kind", "y"}, {"pair", {i + 1, j + 1}}});
        } else {
            vertices.push_back({{"kind", "x"}, {"index", v + 1}, {"frozen", cq.is_frozen(v)}});
        }
    }
    Json arrows = Json::array();
    for (std::size_t u = 0; u < cq.size(); ++u) {
        Json row = Json::array();
        for (std::size_t v = 0; v < cq.size(); ++v) row.push_back(cq.arrows(u, v));
        arrows.push_back(row);
    }
    return {{"n", cq.n()}, {"m", cq.m()}, {"vertices", vertices}, {"arrows", arrows}};
}

ColoredQuiver colored_from_json(const Json& j) {
    try {
        ColoredQuiver cq(j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>());
        const Json& arrows = j.at("arrows");
        if (arrows.size() != cq.size()) throw ParseError("arrow matrix has the wrong size");
        for (std::size_t u = 0; u < cq.size(); ++u) {
            if (arrows[u].size() != cq.size()) throw ParseError("arrow matrix has the wrong size");
            for (std::size_t v = 0; v < cq.size(); ++v) cq.set_entry(u, v, arrows[u][v].get<std::int64_t>());
        }
        if (j.contains("vertices")) {
            const Json& vs = j.at("vertices");
            if (vs.size() != cq.size()) throw ParseError("vertex list has the wrong size");
            for (std::size_t v = 0; v < cq.size(); ++v) {
                const std::string kind = vs[v].at("kind").get<std::string>();
                if (kind != (cq.is_y(v) ? "y" : "x")) throw ParseError("vertex kinds must list x's before y's");
                if (kind == "x" && vs[v].value("frozen", false)) cq.set_frozen(v);
            }
        }
        return cq;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("colored quiver JSON: ") + e.what());
    }
}

} // namespace supercluster
