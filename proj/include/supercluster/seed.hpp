#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supercluster/quiver.hpp"
#include "supercluster/super_poly.hpp"
#include "supercluster/super_rational.hpp"

namespace supercluster {

/// An extended quiver with one cluster variable per even vertex, each
/// expressed in the initial variables of the quiver's signature.
class Seed {
public:
    Seed() = default;
    /// Initial seed: cluster(k) = x_k.
    explicit Seed(ExtendedQuiver quiver);
    Seed(ExtendedQuiver quiver, std::vector<SuperLaurentPoly> cluster, std::vector<std::size_t> history = {});

    const ExtendedQuiver& quiver() const { return quiver_; }
    const std::vector<SuperLaurentPoly>& cluster() const { return cluster_; }
    const SuperLaurentPoly& cluster(std::size_t k) const { return cluster_.at(k); }
    const std::vector<std::size_t>& history() const { return history_; }
    Signature signature() const { return quiver_.signature(); }

    friend bool operator==(const Seed&, const Seed&) = default;

private:
    friend Seed mutate_seed(const Seed& s, std::size_t k);
    ExtendedQuiver quiver_;
    std::vector<SuperLaurentPoly> cluster_;
    std::vector<std::size_t> history_;
};

/// prod cluster(l)^[b_kl]+ + prod (1 + xi_i xi_j)^c(i,j,k) prod cluster(l)^[b_lk]+
SuperLaurentPoly exchange_numerator(const Seed& s, std::size_t k);
Seed mutate_seed(const Seed& s, std::size_t k);
Seed mutation_sequence(const Seed& s, const std::vector<std::size_t>& ks);

/// Every entry is a canonical Laurent polynomial over the seed's signature.
bool check_laurent(const Seed& s);
/// Every fraction reduces to a Laurent polynomial (its denominator is a unit
/// or divides the numerator exactly).
bool check_laurent(const std::vector<SuperRational>& values);

/// Runs ks in the super engine and in the classical reference engine and
/// compares the xi = 0 projections entrywise.
bool classical_limit_check(const Seed& s, const std::vector<std::size_t>& ks);

/// Renders a + b*xi1*xi2 as "a+bε" (e.g. "2+ε", "3-2ε", "ε").
std::string render_dual(const SuperLaurentPoly& value);

/// Quiver JSON plus "cluster" (polynomial JSON per even vertex) and "history"
/// (one-based vertices). A missing cluster means the initial seed.
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

} // namespace supercluster
