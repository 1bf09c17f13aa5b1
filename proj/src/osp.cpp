#include "supercluster/osp.hpp"

#include <string>

#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

constexpr std::array<bool, 9> kOddSlot{false, false, true, false, false, true, true, true, false};

SuperLaurentPoly one(Signature sig) { return SuperLaurentPoly::constant(sig, 1); }

} // namespace

OSpMatrix OSpMatrix::identity(Signature sig) {
    const SuperLaurentPoly z(sig);
    return {one(sig), z, z, one(sig), one(sig), z, z, z, z};
}

std::array<SuperLaurentPoly, 9> OSpMatrix::entries() const { return {a, b, gamma, c, d, delta, alpha, beta, e}; }

OSpMatrix OSpMatrix::from_entries(const std::array<SuperLaurentPoly, 9>& m) {
    return {m[0], m[1], m[3], m[4], m[8], m[6], m[7], m[2], m[5]};
}

bool is_osp(const OSpMatrix& m) {
    const auto ent = m.entries();
    for (std::size_t s = 0; s < 9; ++s) {
        if (ent[s].signature() != m.signature()) return false;
        if (kOddSlot[s] ? !is_odd_element(ent[s]) : !is_even_element(ent[s])) return false;
    }
    const Signature sig = m.signature();
    return m.a * m.d == one(sig) + m.b * m.c - m.alpha * m.beta && m.e == one(sig) + m.alpha * m.beta &&
           m.gamma == m.a * m.beta - m.b * m.alpha && m.delta == m.c * m.beta - m.d * m.alpha;
}

OSpMatrix mul_matrix(const OSpMatrix& m, const OSpMatrix& n) {
    const auto x = m.entries();
    const auto y = n.entries();
    std::array<SuperLaurentPoly, 9> r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            SuperLaurentPoly s(m.signature());
            for (std::size_t j = 0; j < 3; ++j) s += x[3 * i + j] * y[3 * j + k];
            r[3 * i + k] = s;
        }
    }
    return OSpMatrix::from_entries(r);
}

OSpMatrix mul_osp(const OSpMatrix& m, const OSpMatrix& n) {
    if (!is_osp(m) || !is_osp(n)) throw NotInGroup("factor is not in OSp(1|2)");
    return mul_matrix(m, n);
}

OSpMatrix inverse_osp(const OSpMatrix& m) {
    if (!is_osp(m)) throw NotInGroup("matrix is not in OSp(1|2)");
    return {m.d, -m.b, -m.c, m.a, m.e, m.delta, -m.gamma, -m.beta, m.alpha};
}

OSpMatrix schrodinger_matrix(const SuperLaurentPoly& a, const SuperLaurentPoly& beta) {
    if (a.signature() != beta.signature()) throw SignatureError("coefficients have different signatures");
    if (!is_even_element(a)) throw ParityError("a must be even");
    if (!is_odd_element(beta)) throw ParityError("beta must be odd");
    const Signature sig = a.signature();
    const SuperLaurentPoly z(sig);
    return {z, one(sig), -one(sig), a, one(sig), z, beta, z, -beta};
}

SuperLaurentPoly SchrodingerSystem::a_at(long i) const {
    const long n = static_cast<long>(period());
    if (n == 0) throw IndexOutOfRange("empty system");
    return a[static_cast<std::size_t>(((i - 1) % n + n) % n)];
}

SuperLaurentPoly SchrodingerSystem::beta_at(long i) const {
    const long n = static_cast<long>(period());
    if (n == 0) throw IndexOutOfRange("empty system");
    const long shifted = i - 1;
    const long q = shifted >= 0 ? shifted / n : -((-shifted + n - 1) / n);
    const SuperLaurentPoly& b = beta[static_cast<std::size_t>(shifted - q * n)];
    return q % 2 == 0 ? b : -b;
}

OSpMatrix monodromy(const SchrodingerSystem& sys, Signature sig) {
    OSpMatrix m = OSpMatrix::identity(sig);
    for (std::size_t i = 0; i < sys.period(); ++i) m = mul_matrix(schrodinger_matrix(sys.a[i], sys.beta[i]), m);
    return m;
}

std::array<SuperLaurentPoly, 3> schrodinger_step(const SuperLaurentPoly& a, const SuperLaurentPoly& beta,
                                                 const std::array<SuperLaurentPoly, 3>& state) {
    const auto& [v2, v1, w1] = state;
    return {v1, -v2 + a * v1 - beta * w1, beta * v1 + w1};
}

bool satisfies_rule(const Diamond& dm) {
    const Signature sig = dm.A.signature();
    return dm.A * dm.D - dm.B * dm.C == one(sig) + dm.Sigma * dm.Xi && dm.B * dm.Phi - dm.A * dm.Psi == dm.Xi &&
           dm.B * dm.Sigma - dm.D * dm.Xi == dm.Psi;
}

bool satisfies_derived_rule(const Diamond& dm) {
    return dm.A * dm.Sigma - dm.C * dm.Xi == dm.Phi && dm.D * dm.Phi - dm.C * dm.Psi == dm.Sigma;
}

Diamond diamond_osp(const OSpMatrix& m) {
    return {m.b, -m.a, m.d, -m.c, m.gamma, m.alpha, -m.beta, m.delta};
}

OSpMatrix osp_of_diamond(const Diamond& dm) {
    if (!satisfies_rule(dm)) throw RelationViolation("diamond breaks the frieze rule");
    OSpMatrix m{-dm.B, dm.A, -dm.D, dm.C, one(dm.A.signature()), dm.Psi, -dm.Phi, dm.Xi, dm.Sigma};
    m.e += m.alpha * m.beta;
    return m;
}

Json osp_to_json(const OSpMatrix& m) {
    const auto ent = m.entries();
    Json rows = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < 3; ++k) {
            row.push_back({{"parity", kOddSlot[3 * i + k] ? "odd" : "even"}, {"value", poly_to_json(ent[3 * i + k])}});
        }
        rows.push_back(row);
    }
    return {{"entries", rows}};
}

OSpMatrix osp_from_json(const Json& j, Signature sig) {
    try {
        const Json& rows = j.at("entries");
        if (rows.size() != 3) throw ParseError("matrix must have three rows");
        std::array<SuperLaurentPoly, 9> ent;
        for (std::size_t i = 0; i < 3; ++i) {
            if (rows[i].size() != 3) throw ParseError("matrix rows must have three entries");
            for (std::size_t k = 0; k < 3; ++k) {
                const Json& cell = rows[i][k];
                const std::string parity = cell.at("parity").get<std::string>();
                if (parity != (kOddSlot[3 * i + k] ? "odd" : "even")) throw ParseError("parity tag does not match the slot");
                ent[3 * i + k] = poly_from_json(cell.at("value"), sig);
            }
        }
        return OSpMatrix::from_entries(ent);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

} // namespace supercluster
