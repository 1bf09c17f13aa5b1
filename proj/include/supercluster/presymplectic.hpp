#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "supercluster/quiver.hpp"
#include "supercluster/seed.hpp"
#include "supercluster/super_rational.hpp"

namespace supercluster {

/// Generator of degree-one forms: dlog x_index (even) or d xi_index (odd).
/// Even generators sort first.
struct FormGen {
    bool odd = false;
    std::size_t index = 0;
    friend auto operator<=>(const FormGen&, const FormGen&) = default;
};

inline FormGen dlog_x(std::size_t k) { return {false, k}; }
inline FormGen d_xi(std::size_t i) { return {true, i}; }

/// Sum of coefficient * generator, coefficients on the left.
using OneForm = std::map<FormGen, SuperRational>;

/// Degree-two form sum f * u v over words u <= v. Generators obey
/// u v = (-1)^(1 + |u||v|) v u (dlog's anticommute, d xi's commute), and a
/// coefficient of parity p passes a generator of parity q with sign (-1)^(pq).
class SuperForm {
public:
    using Word = std::pair<FormGen, FormGen>;

    SuperForm() = default;
    explicit SuperForm(Signature sig) : sig_(sig) {}

    Signature signature() const { return sig_; }
    const std::map<Word, SuperRational>& words() const { return words_; }
    bool is_zero() const;

    /// Adds coeff * u v, bringing the word to normal form.
    void add(const SuperRational& coeff, FormGen u, FormGen v);
    /// The d xi d xi words only.
    SuperForm odd_odd_part() const;

    SuperForm& operator+=(const SuperForm& o);
    friend SuperForm operator+(SuperForm a, const SuperForm& b) { return a += b; }

private:
    Signature sig_;
    std::map<Word, SuperRational> words_;
};

/// d f for a function f, split over dlog x_l (coefficient x_l df/dx_l) and
/// d xi_i. d obeys d(uv) = (du) v + (-1)^deg(u) u dv, so
/// d(xi_i xi_j) = dxi_i xi_j + xi_i dxi_j = -xi_j dxi_i + xi_i dxi_j.
OneForm differential(const SuperLaurentPoly& f);

/// a wedge b, moving b's coefficients left past a's generators.
SuperForm wedge(const OneForm& a, const OneForm& b, Signature sig);

/// sum_{i<j} b_ij dlog x_i dlog x_j + sum c(i,j,l) d(xi_i xi_j) dlog x_l.
SuperForm form_of_quiver(const ExtendedQuiver& q);

/// Rewrites w in the coordinates after mutating s at k: dlog x_k becomes
/// dE_k/E_k - dlog x_k', and x_k inside coefficients becomes E_k / x_k'. E_k
/// is the exchange numerator of s's quiver in its own cluster coordinates.
SuperForm pullback_mutation(const SuperForm& w, const Seed& s, std::size_t k);

/// Coefficientwise equality after normal form.
bool forms_equal(const SuperForm& a, const SuperForm& b);

/// pullback_mutation(form_of_quiver(q)) equals form_of_quiver(mutate(q, k)).
bool check_invariance(const ExtendedQuiver& q, std::size_t k);

std::string render_form(const SuperForm& w, const VariableNames& names);

} // namespace supercluster
