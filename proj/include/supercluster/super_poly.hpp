#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "supercluster/laurent.hpp"
#include "supercluster/odd_mask.hpp"

namespace supercluster {

/// Numbers of even (Laurent) and odd (Grassmann) generators.
struct Signature {
    std::size_t even = 0;
    std::size_t odd = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

enum class Parity { Zero, Even, Odd, Mixed };

struct SuperTerm {
    Integer coeff;
    Exponents xexp{};
    OddMask odd;
};

/// Coefficient of one odd monomial xi_S: a commutative Laurent polynomial.
struct SuperComponent {
    OddMask mask;
    LaurentPoly poly;
};

/// Element of Z[x_1^{+-1},...,x_n^{+-1}] (x) Lambda[xi_1,...,xi_m], stored as a
/// list of nonzero components in canonical mask order.
class SuperLaurentPoly {
public:
    SuperLaurentPoly() = default;
    explicit SuperLaurentPoly(Signature sig);

    static SuperLaurentPoly constant(Signature sig, const Integer& c);
    static SuperLaurentPoly even_var(Signature sig, std::size_t index, std::int32_t power = 1);
    static SuperLaurentPoly odd_var(Signature sig, std::size_t index);
    static SuperLaurentPoly monomial(Signature sig, const Exponents& x, OddMask mask, const Integer& c = 1);
    static SuperLaurentPoly from_body(Signature sig, LaurentPoly body);
    static SuperLaurentPoly from_terms(Signature sig, std::vector<SuperTerm> terms);
    /// Components may come in any order and repeat; zero components are dropped.
    static SuperLaurentPoly from_components(Signature sig, std::vector<SuperComponent> comps);

    Signature signature() const { return sig_; }
    bool is_zero() const { return comps_.empty(); }
    Parity parity() const;
    std::span<const SuperComponent> components() const { return comps_; }
    /// Coefficient of xi_S (zero polynomial when absent).
    LaurentPoly component(OddMask mask) const;
    /// The xi-free part.
    LaurentPoly body() const;
    /// Terms in canonical order: by odd index list, then by exponent vector.
    std::vector<SuperTerm> terms() const;
    std::size_t term_count() const;
    /// Components sorted, nonzero and within the signature; each canonical.
    bool is_canonical() const;

    SuperLaurentPoly nilpotent_part() const;
    /// Negates the odd-degree components.
    SuperLaurentPoly grade_involution() const;
    SuperLaurentPoly scaled(const Integer& k) const;
    SuperLaurentPoly shifted(const Exponents& by) const;
    SuperLaurentPoly pow(unsigned e) const;
    /// Same element viewed over a signature with at least as many generators.
    SuperLaurentPoly embedded(Signature bigger) const;

    SuperLaurentPoly operator-() const;
    SuperLaurentPoly& operator+=(const SuperLaurentPoly& o);
    SuperLaurentPoly& operator-=(const SuperLaurentPoly& o);
    friend SuperLaurentPoly operator+(SuperLaurentPoly a, const SuperLaurentPoly& b) { return a += b; }
    friend SuperLaurentPoly operator-(SuperLaurentPoly a, const SuperLaurentPoly& b) { return a -= b; }
    friend SuperLaurentPoly operator*(const SuperLaurentPoly& a, const SuperLaurentPoly& b);
    SuperLaurentPoly& operator*=(const SuperLaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const SuperLaurentPoly& a, const SuperLaurentPoly& b);

private:
    Signature sig_;
    std::vector<SuperComponent> comps_;
};

SuperLaurentPoly mul(const SuperLaurentPoly& p, const SuperLaurentPoly& q);

/// r with r * q = p. q must be even with nonzero body; throws NotDivisible when
/// no Laurent quotient exists.
SuperLaurentPoly exact_div(const SuperLaurentPoly& p, const SuperLaurentPoly& q);

/// Inverse of c x^a (1 + N) with c = +-1 and N nilpotent; throws NotUnit otherwise.
SuperLaurentPoly invert_unit(const SuperLaurentPoly& u);

/// u^e for any integer e, using invert_unit when e < 0.
SuperLaurentPoly unit_pow(const SuperLaurentPoly& u, long e);

/// Drops every term that carries an odd generator.
SuperLaurentPoly classical_projection(const SuperLaurentPoly& p);

/// True when all masks have even size (Zero counts as even).
bool is_even_element(const SuperLaurentPoly& p);
bool is_odd_element(const SuperLaurentPoly& p);

} // namespace supercluster
