#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "supercluster/laurent.hpp"

namespace supercluster::classical {

/// Commutative Laurent polynomial kept as an ordered map from exponent vectors
/// to coefficients. Independent of LaurentPoly so it can serve as a reference.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Integer>;

Poly constant(std::size_t nvars, const Integer& c);
Poly variable(std::size_t nvars, std::size_t index);
Poly add(const Poly& a, const Poly& b);
Poly multiply(const Poly& a, const Poly& b);
Poly power(const Poly& a, unsigned e);
/// Quotient when p is a multiple of d in the Laurent ring.
std::optional<Poly> divide(const Poly& p, const Poly& d);

/// Cluster seed of an ordinary skew-symmetric quiver.
struct Seed {
    std::vector<std::vector<std::int64_t>> b;
    std::vector<bool> frozen;
    std::vector<Poly> cluster;
};

Seed initial_seed(const std::vector<std::vector<std::int64_t>>& b, const std::vector<bool>& frozen);
/// Throws NotDivisible if the exchange does not divide.
Seed mutate(const Seed& s, std::size_t k);

Poly from_laurent(const LaurentPoly& p);
LaurentPoly to_laurent(const Poly& p, std::size_t nvars);

} // namespace supercluster::classical
