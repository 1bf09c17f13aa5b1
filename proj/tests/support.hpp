#pragma once

#include <random>
#include <string>

#include "supercluster/poly_io.hpp"
#include "supercluster/super_poly.hpp"

namespace test_support {

using namespace supercluster;

inline SuperLaurentPoly P(const std::string& text, Signature sig) { return parse_poly(text, sig); }

/// Random polynomial with small coefficients and exponents; odd masks drawn
/// from all subsets.
inline SuperLaurentPoly random_poly(std::mt19937_64& rng, Signature sig, int max_terms, int min_exp = -2,
                                    int max_exp = 2, bool allow_odd = true) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(min_exp, max_exp);
    std::uniform_int_distribution<std::uint32_t> mask(0, (std::uint32_t{1} << sig.odd) - 1);
    std::vector<SuperTerm> terms;
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        SuperTerm term;
        term.coeff = coeff(rng);
        for (std::size_t i = 0; i < sig.even; ++i) term.xexp[i] = expo(rng);
        if (allow_odd && sig.odd > 0) term.odd = OddMask::from_bits(mask(rng));
        terms.push_back(term);
    }
    return SuperLaurentPoly::from_terms(sig, std::move(terms));
}

/// Random polynomial containing only even-size masks.
inline SuperLaurentPoly random_even_poly(std::mt19937_64& rng, Signature sig, int max_terms, int min_exp = -2,
                                         int max_exp = 2) {
    SuperLaurentPoly p = random_poly(rng, sig, max_terms, min_exp, max_exp);
    std::vector<SuperComponent> keep;
    for (const auto& c : p.components()) {
        if (c.mask.is_even()) keep.push_back(c);
    }
    return SuperLaurentPoly::from_components(sig, std::move(keep));
}

} // namespace test_support
