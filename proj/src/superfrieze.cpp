#include "supercluster/superfrieze.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

long floor_half(long a2) { return a2 >= 0 ? a2 / 2 : -((-a2 + 1) / 2); }

SuperLaurentPoly one(Signature sig) { return SuperLaurentPoly::constant(sig, 1); }

std::string at_string(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string half_string(long a2) {
    return a2 % 2 == 0 ? std::to_string(a2 / 2) : std::to_string(a2) + "/2";
}

std::string phi_string(long a2, long b2) { return "phi(" + half_string(a2) + "," + half_string(b2) + ")"; }

} // namespace

SuperFrieze::SuperFrieze(std::size_t width, Signature sig) : m_(width), sig_(sig) {
    if (width < 1) throw InvalidWidth("frieze width must be at least 1");
}

std::optional<SuperLaurentPoly> SuperFrieze::f(long i, long j) const {
    const long r = j - i;
    const long m = static_cast<long>(m_);
    if (r == -1 || r == m) return one(sig_);
    if (r == -2 || r == m + 1) return SuperLaurentPoly(sig_);
    if (r < -2 || r > m + 1 || i < lo_ || i > hi_) return std::nullopt;
    const auto it = f_.find({i, j});
    if (it == f_.end()) return std::nullopt;
    return it->second;
}

std::optional<SuperLaurentPoly> SuperFrieze::phi2(long a2, long b2) const {
    if ((a2 - b2) % 2 != 0) return std::nullopt;
    const long d = (b2 - a2) / 2;
    const long m = static_cast<long>(m_);
    if (d == -1 || d == m + 1) return SuperLaurentPoly(sig_);
    const long diag = floor_half(a2);
    if (d < -1 || d > m + 1 || diag < lo_ || diag > hi_) return std::nullopt;
    const auto it = phi_.find({a2, b2});
    if (it == phi_.end()) return std::nullopt;
    return it->second;
}

SuperLaurentPoly SuperFrieze::f_at(long i, long j) const {
    auto v = f(i, j);
    if (!v) throw IndexOutOfRange("frieze entry f" + at_string(i, j) + " is not available");
    return *std::move(v);
}

SuperLaurentPoly SuperFrieze::phi2_at(long a2, long b2) const {
    auto v = phi2(a2, b2);
    if (!v) throw IndexOutOfRange("frieze entry " + phi_string(a2, b2) + " is not available");
    return *std::move(v);
}

void SuperFrieze::set_f(long i, long j, SuperLaurentPoly v) {
    if (j - i < 0 || j - i >= static_cast<long>(m_)) throw IndexOutOfRange("f" + at_string(i, j) + " is not a free entry");
    if (v.signature() != sig_) throw SignatureError("entry signature differs from the frieze");
    extend(i);
    f_[{i, j}] = std::move(v);
}

void SuperFrieze::set_phi2(long a2, long b2, SuperLaurentPoly v) {
    if ((a2 - b2) % 2 != 0 || b2 < a2 || (b2 - a2) / 2 > static_cast<long>(m_)) {
        throw IndexOutOfRange(phi_string(a2, b2) + " is not a free entry");
    }
    if (v.signature() != sig_) throw SignatureError("entry signature differs from the frieze");
    extend(floor_half(a2));
    phi_[{a2, b2}] = std::move(v);
}

void SuperFrieze::extend(long i) {
    if (lo_ > hi_) {
        lo_ = hi_ = i;
        return;
    }
    lo_ = std::min(lo_, i);
    hi_ = std::max(hi_, i);
}

SuperFrieze generate(std::size_t m, const std::vector<SuperLaurentPoly>& even, const std::vector<SuperLaurentPoly>& odd,
                     long backward, long forward) {
    if (m < 1) throw InvalidWidth("frieze width must be at least 1");
    if (even.size() != m || odd.size() != m + 1) {
        throw InvalidWidth("width " + std::to_string(m) + " needs " + std::to_string(m) + " even and " +
                           std::to_string(m + 1) + " odd initial entries");
    }
    if (backward < 0 || forward < 0) throw IndexOutOfRange("diagonal counts must be nonnegative");
    const Signature sig = even.front().signature();
    for (const auto& e : even) {
        if (e.signature() != sig) throw SignatureError("initial entries have different signatures");
        if (!is_even_element(e)) throw ParityError("even initial entry has odd part");
    }
    for (const auto& o : odd) {
        if (o.signature() != sig) throw SignatureError("initial entries have different signatures");
        if (!is_odd_element(o)) throw ParityError("odd initial entry has even part");
    }

    const long w = static_cast<long>(m);
    SuperFrieze F(m, sig);
    for (long k = 0; k < w; ++k) F.set_f(0, k, even[static_cast<std::size_t>(k)]);
    for (long k = 0; k <= w; ++k) F.set_phi2(1, 2 * k + 1, odd[static_cast<std::size_t>(k)]);

    // Half entries of diagonal i are phi2(2i+1, .).
    for (long i = 0; i < forward; ++i) {
        for (long j = i + 1; j <= i + w; ++j) {
            const SuperLaurentPoly num =
                one(sig) + F.f_at(i + 1, j - 1) * F.f_at(i, j) + F.phi2_at(2 * i + 1, 2 * j + 1) * F.phi2_at(2 * i + 1, 2 * j - 1);
            F.set_f(i + 1, j, exact_div(num, F.f_at(i, j - 1)));
        }
        const SuperLaurentPoly lead = F.phi2_at(2 * i + 1, 2 * i + 1);
        for (long q2 = 2 * i + 3; q2 <= 2 * (i + w) + 3; q2 += 2) {
            F.set_phi2(2 * i + 3, q2, F.phi2_at(2 * i + 1, q2) - F.f_at(i + 1, (q2 - 1) / 2) * lead);
        }
    }
    for (long i = -1; i >= -backward; --i) {
        const SuperLaurentPoly lead = -F.phi2_at(2 * i + 3, 2 * (i + w) + 3);
        F.set_phi2(2 * i + 1, 2 * i + 1, lead);
        for (long q2 = 2 * i + 3; q2 <= 2 * (i + w) + 1; q2 += 2) {
            F.set_phi2(2 * i + 1, q2, F.phi2_at(2 * i + 3, q2) + F.f_at(i + 1, (q2 - 1) / 2) * lead);
        }
        for (long j = i + w; j > i; --j) {
            const SuperLaurentPoly num =
                one(sig) + F.f_at(i + 1, j - 1) * F.f_at(i, j) + F.phi2_at(2 * i + 1, 2 * j + 1) * F.phi2_at(2 * i + 1, 2 * j - 1);
            F.set_f(i, j - 1, exact_div(num, F.f_at(i + 1, j)));
        }
    }
    for (long i = -backward; i <= forward; ++i) {
        for (long q = i; q <= i + w; ++q) {
            F.set_phi2(2 * i, 2 * q,
                       F.f_at(i, q - 1) * F.phi2_at(2 * i + 1, 2 * q + 1) - F.f_at(i, q) * F.phi2_at(2 * i + 1, 2 * q - 1));
        }
    }
    return F;
}

SuperFrieze generate_symbolic(std::size_t m) {
    if (m < 1) throw InvalidWidth("frieze width must be at least 1");
    if (m > kMaxEven || m + 1 > kMaxOdd) throw InvalidWidth("frieze width too large");
    const Signature sig{m, m + 1};
    std::vector<SuperLaurentPoly> even, odd;
    for (std::size_t k = 0; k < m; ++k) even.push_back(SuperLaurentPoly::even_var(sig, k));
    for (std::size_t k = 0; k <= m; ++k) odd.push_back(SuperLaurentPoly::odd_var(sig, k));
    const long n = static_cast<long>(m + 3);
    return generate(m, even, odd, n, 2 * n);
}

std::optional<Diamond> diamond_at(const SuperFrieze& F, long i, long j) {
    auto A = F.f(i - 1, j), B = F.f(i, j), C = F.f(i - 1, j + 1), D = F.f(i, j + 1);
    auto Xi = F.phi2(2 * i - 1, 2 * j + 1), Psi = F.phi2(2 * i, 2 * j + 2);
    auto Phi = F.phi2(2 * i - 2, 2 * j + 2), Sigma = F.phi2(2 * i - 1, 2 * j + 3);
    if (!A || !B || !C || !D || !Xi || !Psi || !Phi || !Sigma) return std::nullopt;
    return Diamond{*A, *B, *C, *D, *Xi, *Psi, *Phi, *Sigma};
}

FriezeCheck check_diamonds(const SuperFrieze& F) {
    FriezeCheck r;
    const long m = static_cast<long>(F.width());
    for (long i = F.first_diagonal(); i <= F.last_diagonal() + 1; ++i) {
        for (long row = -1; row < m; ++row) {
            const auto dm = diamond_at(F, i, i + row);
            if (!dm) continue;
            ++r.checked;
            if (!satisfies_rule(*dm) || !satisfies_derived_rule(*dm)) {
                r.ok = false;
                r.failure = "diamond with top f" + at_string(i, i + row);
                return r;
            }
        }
    }
    if (r.checked == 0) {
        r.ok = false;
        r.failure = "no complete diamond stored";
    }
    return r;
}

FriezeCheck check_glide(const SuperFrieze& F) {
    FriezeCheck r;
    const long m = static_cast<long>(F.width());
    const long n = static_cast<long>(F.period());
    std::size_t glide_even = 0, glide_odd = 0, shift = 0;
    auto fail = [&](std::string what) {
        r.ok = false;
        r.failure = std::move(what);
        return r;
    };
    for (const auto& [key, v] : F.even_entries()) {
        const auto [i, j] = key;
        if (const auto g = F.f(j - m - 1, i - 2)) {
            ++glide_even;
            if (!(*g == v)) return fail("glide of f" + at_string(i, j));
        }
        if (const auto s = F.f(i + n, j + n)) {
            ++shift;
            if (!(*s == v)) return fail("period of f" + at_string(i, j));
        }
    }
    for (const auto& [key, v] : F.odd_entries()) {
        const auto [a2, b2] = key;
        // Integer entries glide to half entries and back: phi(i,j) = phi(j-m-3/2, i-3/2).
        // Half ones pick up a sign: phi(p+1/2,q+1/2) = -phi(q-m-1, p-1). Both read (b2-2m-3, a2-3) doubled.
        if (const auto g = F.phi2(b2 - 2 * m - 3, a2 - 3)) {
            ++glide_odd;
            const SuperLaurentPoly expect = a2 % 2 == 0 ? v : -v;
            if (!(*g == expect)) return fail("glide of " + phi_string(a2, b2));
        }
        if (const auto s = F.phi2(a2 + 2 * n, b2 + 2 * n)) {
            ++shift;
            if (!(*s == -v)) return fail("antiperiod of " + phi_string(a2, b2));
        }
    }
    r.checked = glide_even + glide_odd + shift;
    if (glide_even == 0 || glide_odd == 0 || shift == 0) return fail("stored diagonals do not cover a glide");
    return r;
}

SchrodingerSystem extract_schrodinger(const SuperFrieze& F) {
    const long n = static_cast<long>(F.period());
    const long m = static_cast<long>(F.width());
    if (F.first_diagonal() > 1 || F.last_diagonal() < n) {
        throw CoefficientExtractionFailure("frieze must store diagonals 1.." + std::to_string(n));
    }
    auto a_at = [&](long j) { return F.f_at(j, j); };
    auto beta_at = [&](long j) { return F.phi2_at(2 * j, 2 * j); };

    // Along diagonal i: V_j = f(i,j), W_j = phi(i,j), from V_{i-2} = 0,
    // V_{i-1} = 1, W_{i-1} = 0 up to the bottom boundary.
    for (long i = F.first_diagonal(); i <= F.last_diagonal(); ++i) {
        const Signature sig = F.signature();
        std::array<SuperLaurentPoly, 3> state{SuperLaurentPoly(sig), one(sig), SuperLaurentPoly(sig)};
        for (long j = i; j <= std::min(i + m, F.last_diagonal()); ++j) {
            state = schrodinger_step(a_at(j), beta_at(j), state);
            const auto v = F.f(i, j);
            const auto w = F.phi2(2 * i, 2 * j);
            if (!v || !w) break;
            if (!(state[1] == *v) || !(state[2] == *w)) {
                throw CoefficientExtractionFailure("diagonal " + std::to_string(i) + " leaves the recurrence at step " +
                                                   std::to_string(j));
            }
        }
    }

    SchrodingerSystem sys;
    for (long j = 1; j <= n; ++j) {
        sys.a.push_back(a_at(j));
        sys.beta.push_back(beta_at(j));
    }
    return sys;
}

bool frieze_vs_seed(std::size_t m) {
    const SuperFrieze F = generate_symbolic(m);
    Seed s(build_aquiv(m));
    for (std::size_t k = 0; k < m; ++k) s = mutate_seed(s, k);
    const Signature sig = F.signature();
    const long w = static_cast<long>(m);
    for (long k = 1; k <= w; ++k) {
        if (!(s.cluster(static_cast<std::size_t>(k - 1)) == F.f_at(1, k))) return false;
    }
    for (long k = 1; k <= w + 1; ++k) {
        const SuperLaurentPoly next = k <= w ? SuperLaurentPoly::odd_var(sig, static_cast<std::size_t>(k)) : SuperLaurentPoly(sig);
        const SuperLaurentPoly expect = next - F.f_at(1, k) * SuperLaurentPoly::odd_var(sig, 0);
        if (!(expect == F.phi2_at(3, 2 * k + 1))) return false;
    }
    return true;
}

Json frieze_to_json(const SuperFrieze& F) {
    const long m = static_cast<long>(F.width());
    Json even = Json::array(), odd = Json::array();
    for (long i = F.first_diagonal(); i <= F.last_diagonal(); ++i) {
        Json e = Json::array(), o = Json::array();
        for (long j = i; j < i + m; ++j) e.push_back(poly_to_json(F.f_at(i, j)));
        for (long d = 0; d <= m; ++d) {
            o.push_back(poly_to_json(F.phi2_at(2 * i, 2 * (i + d))));
            o.push_back(poly_to_json(F.phi2_at(2 * i + 1, 2 * (i + d) + 1)));
        }
        even.push_back(std::move(e));
        odd.push_back(std::move(o));
    }
    return {{"width", F.width()},
            {"period", F.period()},
            {"offsets", {{"first_diagonal", F.first_diagonal()}, {"index_scale", 2}}},
            {"even", std::move(even)},
            {"odd", std::move(odd)}};
}

SuperFrieze frieze_from_json(const Json& j, Signature sig) {
    try {
        const long m = j.at("width").get<long>();
        if (m < 1) throw InvalidWidth("frieze width must be at least 1");
        const long first = j.at("offsets").at("first_diagonal").get<long>();
        const Json& even = j.at("even");
        const Json& odd = j.at("odd");
        if (even.size() != odd.size()) throw ParseError("even and odd parts have different diagonal counts");
        SuperFrieze F(static_cast<std::size_t>(m), sig);
        for (std::size_t d = 0; d < even.size(); ++d) {
            const long i = first + static_cast<long>(d);
            if (even[d].size() != static_cast<std::size_t>(m) || odd[d].size() != static_cast<std::size_t>(2 * m + 2)) {
                throw ParseError("diagonal " + std::to_string(i) + " has the wrong length");
            }
            for (long t = 0; t < m; ++t) F.set_f(i, i + t, poly_from_json(even[d][static_cast<std::size_t>(t)], sig));
            for (long t = 0; t <= m; ++t) {
                F.set_phi2(2 * i, 2 * (i + t), poly_from_json(odd[d][static_cast<std::size_t>(2 * t)], sig));
                F.set_phi2(2 * i + 1, 2 * (i + t) + 1, poly_from_json(odd[d][static_cast<std::size_t>(2 * t + 1)], sig));
            }
        }
        return F;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("frieze JSON: ") + e.what());
    }
}

std::string render_frieze(const SuperFrieze& F, const VariableNames& names, long first, long last) {
    const long m = static_cast<long>(F.width());
    // Text line 2r+2 holds even row r (r = -1..m), line 2d+1 odd row d. Column
    // in half steps: 2(i+j) for f(i,j), 2(a+b)-1 for phi(a,b).
    std::map<std::pair<long, long>, std::string> cells;
    for (long i = first; i <= last; ++i) {
        for (long r = -1; r <= m; ++r) {
            if (const auto v = F.f(i, i + r)) cells[{2 * r + 2, 2 * (2 * i + r)}] = render(*v, names);
        }
        for (long a2 = 2 * i; a2 <= 2 * i + 1; ++a2) {
            for (long d = 0; d <= m; ++d) {
                if (const auto v = F.phi2(a2, a2 + 2 * d)) cells[{2 * d + 1, 2 * a2 + 2 * d - 1}] = render(*v, names);
            }
        }
    }
    if (cells.empty()) return "";
    std::size_t width = 1;
    long cmin = cells.begin()->first.second;
    for (const auto& [pos, s] : cells) {
        width = std::max(width, s.size());
        cmin = std::min(cmin, pos.second);
    }
    std::vector<std::string> lines(static_cast<std::size_t>(2 * m + 3));
    for (const auto& [pos, s] : cells) {
        std::string& line = lines[static_cast<std::size_t>(pos.first)];
        const std::size_t at = static_cast<std::size_t>(pos.second - cmin) * (width + 1) / 2;
        if (line.size() < at) line.resize(at, ' ');
        line += s;
    }
    std::ostringstream out;
    for (const auto& l : lines) out << l << '\n';
    return out.str();
}

} // namespace supercluster
