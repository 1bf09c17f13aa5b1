#include "supercluster/presymplectic.hpp"

#include <optional>
#include <vector>

#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

std::pair<SuperRational, SuperRational> parity_split(const SuperRational& r) {
    const Signature sig = r.signature();
    std::vector<SuperComponent> even, odd;
    for (const auto& c : r.num().components()) (c.mask.size() % 2 == 0 ? even : odd).push_back(c);
    return {SuperRational(SuperLaurentPoly::from_components(sig, std::move(even)), r.den()),
            SuperRational(SuperLaurentPoly::from_components(sig, std::move(odd)), r.den())};
}

// f * (a wedge b) added into out.
void add_wedge(SuperForm& out, const SuperRational& f, const OneForm& a, const OneForm& b) {
    for (const auto& [u, g] : a) {
        for (const auto& [v, h] : b) {
            const auto [he, ho] = parity_split(h);
            out.add(f * g * (u.odd ? he - ho : he + ho), u, v);
        }
    }
}

bool involves(const SuperLaurentPoly& p, std::size_t k) {
    for (const auto& c : p.components()) {
        const Exponents lo = c.poly.min_exponents();
        const Exponents hi = c.poly.max_exponents();
        if (lo[k] != 0 || hi[k] != 0) return true;
    }
    return false;
}

std::string render_gen(FormGen g, const VariableNames& names) {
    return g.odd ? "d" + names.odd.at(g.index) : "dlog(" + names.even.at(g.index) + ")";
}

} // namespace

bool SuperForm::is_zero() const { return words_.empty(); }

void SuperForm::add(const SuperRational& coeff, FormGen u, FormGen v) {
    if (coeff.is_zero()) return;
    if (u == v && !u.odd) return;
    SuperRational c = coeff;
    if (v < u) {
        std::swap(u, v);
        if (!(u.odd && v.odd)) c = -c;
    }
    const Word w{u, v};
    auto it = words_.find(w);
    if (it == words_.end()) {
        words_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) words_.erase(it);
}

SuperForm SuperForm::odd_odd_part() const {
    SuperForm r(sig_);
    for (const auto& [w, c] : words_) {
        if (w.first.odd && w.second.odd) r.words_.emplace(w, c);
    }
    return r;
}

SuperForm& SuperForm::operator+=(const SuperForm& o) {
    for (const auto& [w, c] : o.words_) add(c, w.first, w.second);
    return *this;
}

OneForm differential(const SuperLaurentPoly& f) {
    const Signature sig = f.signature();
    std::map<FormGen, std::vector<SuperComponent>> parts;
    for (const auto& comp : f.components()) {
        for (std::size_t l = 0; l < sig.even; ++l) {
            std::vector<LaurentTerm> terms;
            for (const auto& t : comp.poly.terms()) {
                if (t.x[l] != 0) terms.push_back({t.x, t.c * t.x[l]});
            }
            if (!terms.empty()) {
                parts[dlog_x(l)].push_back({comp.mask, LaurentPoly::from_terms(sig.even, std::move(terms))});
            }
        }
        // d passes functions without sign; moving the later xi's left past
        // dxi_p costs one sign each.
        const std::vector<std::size_t> idx = comp.mask.indices();
        for (std::size_t p = 0; p < idx.size(); ++p) {
            const OddMask rest = comp.mask.without(OddMask::single(idx[p]));
            const bool negate = (idx.size() - 1 - p) % 2 == 1;
            parts[d_xi(idx[p])].push_back({rest, negate ? -comp.poly : comp.poly});
        }
    }
    OneForm r;
    for (auto& [g, comps] : parts) {
        SuperLaurentPoly c = SuperLaurentPoly::from_components(sig, std::move(comps));
        if (!c.is_zero()) r.emplace(g, SuperRational(std::move(c)));
    }
    return r;
}

SuperForm wedge(const OneForm& a, const OneForm& b, Signature sig) {
    SuperForm r(sig);
    add_wedge(r, SuperRational::one(sig), a, b);
    return r;
}

SuperForm form_of_quiver(const ExtendedQuiver& q) {
    const Signature sig = q.signature();
    SuperForm w(sig);
    for (std::size_t i = 0; i < q.n(); ++i) {
        for (std::size_t j = i + 1; j < q.n(); ++j) {
            if (q.b(i, j) != 0) w.add(SuperRational(SuperLaurentPoly::constant(sig, q.b(i, j))), dlog_x(i), dlog_x(j));
        }
    }
    for (const auto& [key, mult] : q.paths()) {
        const OneForm d = differential(SuperLaurentPoly::odd_var(sig, key.i) * SuperLaurentPoly::odd_var(sig, key.j));
        const OneForm dl{{dlog_x(key.k), SuperRational(SuperLaurentPoly::constant(sig, mult))}};
        w += wedge(d, dl, sig);
    }
    return w;
}

SuperForm pullback_mutation(const SuperForm& w, const Seed& s, std::size_t k) {
    const Signature sig = s.signature();
    const SuperLaurentPoly e = exchange_numerator(Seed(s.quiver()), k);

    OneForm image_k;
    for (const auto& [g, c] : differential(e)) image_k.emplace(g, c * SuperRational(SuperLaurentPoly::constant(sig, 1), e));
    image_k[dlog_x(k)] = SuperRational(SuperLaurentPoly::constant(sig, -1));
    auto image = [&](FormGen g) -> OneForm {
        if (g == dlog_x(k)) return image_k;
        return {{g, SuperRational::one(sig)}};
    };

    std::vector<std::optional<SuperRational>> xs;
    for (std::size_t l = 0; l < sig.even; ++l) xs.emplace_back(SuperRational(SuperLaurentPoly::even_var(sig, l)));
    xs[k] = SuperRational(e, SuperLaurentPoly::even_var(sig, k));
    auto coefficient = [&](const SuperRational& f) {
        if (!involves(f.num(), k) && !involves(f.den(), k)) return f;
        return substitute(f.num(), xs, sig) * substitute(f.den(), xs, sig).inverse();
    };

    SuperForm r(sig);
    for (const auto& [word, f] : w.words()) add_wedge(r, coefficient(f), image(word.first), image(word.second));
    return r;
}

bool forms_equal(const SuperForm& a, const SuperForm& b) {
    if (a.signature() != b.signature()) return false;
    const SuperRational zero = SuperRational::zero(a.signature());
    for (const auto& [w, c] : a.words()) {
        const auto it = b.words().find(w);
        if (!equals_rational(c, it == b.words().end() ? zero : it->second)) return false;
    }
    for (const auto& [w, c] : b.words()) {
        if (!a.words().count(w) && !equals_rational(c, zero)) return false;
    }
    return true;
}

bool check_invariance(const ExtendedQuiver& q, std::size_t k) {
    return forms_equal(pullback_mutation(form_of_quiver(q), Seed(q), k), form_of_quiver(mutate(q, k)));
}

std::string render_form(const SuperForm& w, const VariableNames& names) {
    if (w.is_zero()) return "0";
    std::string out;
    for (const auto& [word, c] : w.words()) {
        if (!out.empty()) out += " + ";
        const SuperRational r = c.simplified();
        std::string coeff = "(" + render(r.num(), names) + ")";
        if (!(r.den() == SuperLaurentPoly::constant(r.signature(), 1))) coeff += "/(" + render(r.den(), names) + ")";
        out += coeff + "*" + render_gen(word.first, names) + "^" + render_gen(word.second, names);
    }
    return out;
}

} // namespace supercluster
