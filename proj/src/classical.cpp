#include "supercluster/classical.hpp"

#include <algorithm>

#include "supercluster/errors.hpp"

namespace supercluster::classical {

namespace {

void prune(Poly& p) {
    for (auto it = p.begin(); it != p.end();) it = it->second.is_zero() ? p.erase(it) : std::next(it);
}

Monomial min_exponents(const Poly& p, std::size_t n) {
    Monomial m(n, 0);
    bool first = true;
    for (const auto& [x, c] : p) {
        for (std::size_t i = 0; i < n; ++i) m[i] = first ? x[i] : std::min(m[i], x[i]);
        first = false;
    }
    return m;
}

Poly shift(const Poly& p, const Monomial& by, int sign) {
    Poly r;
    for (const auto& [x, c] : p) {
        Monomial y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += sign * by[i];
        r.emplace(std::move(y), c);
    }
    return r;
}

} // namespace

Poly constant(std::size_t nvars, const Integer& c) {
    Poly p;
    if (!c.is_zero()) p.emplace(Monomial(nvars, 0), c);
    return p;
}

Poly variable(std::size_t nvars, std::size_t index) {
    Monomial x(nvars, 0);
    x[index] = 1;
    return Poly{{x, 1}};
}

Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [x, c] : b) r[x] += c;
    prune(r);
    return r;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [xa, ca] : a) {
        for (const auto& [xb, cb] : b) {
            Monomial x = xa;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += xb[i];
            r[x] += ca * cb;
        }
    }
    prune(r);
    return r;
}

Poly power(const Poly& a, unsigned e) {
    if (a.empty()) return e == 0 ? Poly{} : a;
    Poly r = constant(a.begin()->first.size(), 1);
    for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

std::optional<Poly> divide(const Poly& p, const Poly& d) {
    if (d.empty()) return std::nullopt;
    if (p.empty()) return Poly{};
    const std::size_t n = d.begin()->first.size();
    const Monomial pm = min_exponents(p, n);
    const Monomial dm = min_exponents(d, n);
    Poly rem = shift(p, pm, -1);
    const Poly dd = shift(d, dm, -1);
    // Lexicographically largest term leads; std::map keeps it at rbegin().
    const auto& [lx, lc] = *dd.rbegin();
    Poly q;
    while (!rem.empty()) {
        const auto& [rx, rc] = *rem.rbegin();
        Monomial t(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = rx[i] - lx[i];
            if (t[i] < 0) return std::nullopt;
        }
        if (rc % lc != 0) return std::nullopt;
        const Integer tc = rc / lc;
        q[t] += tc;
        Poly sub;
        for (const auto& [x, c] : dd) {
            Monomial y = x;
            for (std::size_t i = 0; i < n; ++i) y[i] += t[i];
            sub[y] = -c * tc;
        }
        rem = add(rem, sub);
    }
    Monomial back(n);
    for (std::size_t i = 0; i < n; ++i) back[i] = pm[i] - dm[i];
    return shift(q, back, 1);
}

Seed initial_seed(const std::vector<std::vector<std::int64_t>>& b, const std::vector<bool>& frozen) {
    Seed s{b, frozen, {}};
    for (std::size_t i = 0; i < b.size(); ++i) s.cluster.push_back(variable(b.size(), i));
    return s;
}

Seed mutate(const Seed& s, std::size_t k) {
    const std::size_t n = s.b.size();
    if (k >= n) throw IndexOutOfRange("vertex out of range");
    if (s.frozen[k]) throw FrozenVertex("vertex is frozen");
    const std::size_t nvars = s.cluster[k].empty() ? n : s.cluster[k].begin()->first.size();
    Poly out = constant(nvars, 1);
    Poly in = constant(nvars, 1);
    for (std::size_t l = 0; l < n; ++l) {
        if (s.b[k][l] > 0) out = multiply(out, power(s.cluster[l], static_cast<unsigned>(s.b[k][l])));
        if (s.b[l][k] > 0) in = multiply(in, power(s.cluster[l], static_cast<unsigned>(s.b[l][k])));
    }
    auto q = divide(add(out, in), s.cluster[k]);
    if (!q) throw NotDivisible("classical exchange polynomial not divisible");

    Seed r = s;
    r.cluster[k] = *q;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                r.b[i][j] = -s.b[i][j];
            } else {
                const std::int64_t prod = s.b[i][k] * s.b[k][j];
                if (prod > 0) r.b[i][j] = s.b[i][j] + (s.b[i][k] > 0 ? prod : -prod);
            }
        }
    }
    return r;
}

Poly from_laurent(const LaurentPoly& p) {
    Poly r;
    for (const auto& t : p.terms()) {
        r.emplace(Monomial(t.x.begin(), t.x.begin() + static_cast<std::ptrdiff_t>(p.nvars())), t.c);
    }
    return r;
}

LaurentPoly to_laurent(const Poly& p, std::size_t nvars) {
    std::vector<LaurentTerm> terms;
    for (const auto& [x, c] : p) {
        LaurentTerm t;
        for (std::size_t i = 0; i < nvars; ++i) t.x[i] = x[i];
        t.c = c;
        terms.push_back(std::move(t));
    }
    return LaurentPoly::from_terms(nvars, std::move(terms));
}

} // namespace supercluster::classical
