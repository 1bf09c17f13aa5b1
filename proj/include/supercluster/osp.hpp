#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "supercluster/poly_io.hpp"
#include "supercluster/super_poly.hpp"

namespace supercluster {

/// 3x3 supermatrix
///   ( a      b     gamma )
///   ( c      d     delta )
///   ( alpha  beta  e     )
/// with even a..e and odd Greek entries.
struct OSpMatrix {
    SuperLaurentPoly a, b, c, d, e;
    SuperLaurentPoly alpha, beta, gamma, delta;

    static OSpMatrix identity(Signature sig);
    Signature signature() const { return a.signature(); }
    /// Row-major entries.
    std::array<SuperLaurentPoly, 9> entries() const;
    static OSpMatrix from_entries(const std::array<SuperLaurentPoly, 9>& m);

    friend bool operator==(const OSpMatrix&, const OSpMatrix&) = default;
};

/// Parities are right and ad = 1 + bc - alpha beta, e = 1 + alpha beta,
/// gamma = a beta - b alpha, delta = c beta - d alpha.
bool is_osp(const OSpMatrix& m);

/// Plain matrix product; both factors must satisfy is_osp (NotInGroup).
OSpMatrix mul_osp(const OSpMatrix& m, const OSpMatrix& n);
/// Product without the membership check.
OSpMatrix mul_matrix(const OSpMatrix& m, const OSpMatrix& n);

/// ( d  -b  -beta ; -c  a  alpha ; delta  -gamma  e ), the inverse of an
/// element of the group.
OSpMatrix inverse_osp(const OSpMatrix& m);

/// ( 0 1 0 ; -1 a -beta ; 0 beta 1 ). a even, beta odd (ParityError).
OSpMatrix schrodinger_matrix(const SuperLaurentPoly& a, const SuperLaurentPoly& beta);

/// Coefficients a_1..a_n, beta_1..beta_n extended by a_{i+n} = a_i and
/// beta_{i+n} = -beta_i.
struct SchrodingerSystem {
    std::vector<SuperLaurentPoly> a;
    std::vector<SuperLaurentPoly> beta;

    std::size_t period() const { return a.size(); }
    /// a_i and beta_i for any integer i (one based as in the recurrence).
    SuperLaurentPoly a_at(long i) const;
    SuperLaurentPoly beta_at(long i) const;
};

/// A_n ... A_1 (identity when n = 0).
OSpMatrix monodromy(const SchrodingerSystem& sys, Signature sig);

/// (V_{i-2}, V_{i-1}, W_{i-1}) -> (V_{i-1}, V_i, W_i) with
/// V_i = -V_{i-2} + a V_{i-1} - beta W_{i-1}, W_i = beta V_{i-1} + W_{i-1}.
std::array<SuperLaurentPoly, 3> schrodinger_step(const SuperLaurentPoly& a, const SuperLaurentPoly& beta,
                                                 const std::array<SuperLaurentPoly, 3>& state);

/// Elementary diamond
///         B
///     Xi     Psi
///   A           D
///     Phi    Sigma
///         C
struct Diamond {
    SuperLaurentPoly A, B, C, D;
    SuperLaurentPoly Xi, Psi, Phi, Sigma;
    friend bool operator==(const Diamond&, const Diamond&) = default;
};

/// AD - BC = 1 + Sigma Xi, B Phi - A Psi = Xi, B Sigma - D Xi = Psi.
bool satisfies_rule(const Diamond& dm);
/// The two consequences A Sigma - C Xi = Phi and D Phi - C Psi = Sigma.
bool satisfies_derived_rule(const Diamond& dm);

/// B = -a, Xi = gamma, Psi = alpha, A = b, D = -c, Phi = -beta, Sigma = delta, C = d.
Diamond diamond_osp(const OSpMatrix& m);
/// Inverse of diamond_osp with e = 1 + alpha beta; RelationViolation when the
/// diamond breaks the rule.
OSpMatrix osp_of_diamond(const Diamond& dm);

/// {"entries":[[{"parity":"even","value":poly},...],...]} in row order.
Json osp_to_json(const OSpMatrix& m);
OSpMatrix osp_from_json(const Json& j, Signature sig);

} // namespace supercluster
