#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "supercluster/laurent.hpp"
#include "supercluster/quiver.hpp"
#include "supercluster/seed.hpp"

namespace supercluster {

/// Ordinary quiver on x_1..x_n and one frozen vertex y_ij = 1 + xi_i xi_j per
/// pair i < j of odd indices. Vertex numbers: x_k is k, y_ij follows the x's in
/// lexicographic pair order. arrows(u,v) counts u -> v minus v -> u.
class ColoredQuiver {
public:
    ColoredQuiver() = default;
    ColoredQuiver(std::size_t n, std::size_t m);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    std::size_t pair_count() const { return m_ * (m_ - (m_ > 0 ? 1 : 0)) / 2; }
    std::size_t size() const { return n_ + pair_count(); }

    std::size_t y_vertex(std::size_t i, std::size_t j) const;
    std::pair<std::size_t, std::size_t> pair_of(std::size_t v) const;
    bool is_y(std::size_t v) const { return v >= n_; }

    std::int64_t arrows(std::size_t u, std::size_t v) const;
    /// Sets arrows(u,v) = count and arrows(v,u) = -count.
    void set_arrows(std::size_t u, std::size_t v, std::int64_t count);
    void add_arrows(std::size_t u, std::size_t v, std::int64_t count);
    /// Writes one matrix entry without its mirror.
    void set_entry(std::size_t u, std::size_t v, std::int64_t value);

    /// y vertices are always frozen.
    bool is_frozen(std::size_t v) const;
    void set_frozen(std::size_t k, bool frozen = true);

    friend bool operator==(const ColoredQuiver&, const ColoredQuiver&) = default;

private:
    void check_vertex(std::size_t v) const;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::int64_t> a_;
    std::vector<bool> frozen_;
};

ColoredQuiver to_colored(const ExtendedQuiver& q);
/// Throws MalformedColoredQuiver on y-y arrows, a nonzero diagonal or a
/// non-skew matrix.
ExtendedQuiver from_colored(const ColoredQuiver& cq);

/// Classical mutation at the x vertex k. Arrows it would create between two y
/// vertices are discarded (both ends are frozen).
ColoredQuiver colored_mutate(const ColoredQuiver& cq, std::size_t k);

/// Which ingoing y vertices the transform acts on: every one (with its
/// multiplicity), or only the lowest numbered one.
enum class TransformReading { All, First };

struct MonomialTransform {
    ColoredQuiver quiver;
    /// x_k becomes x_k / prod y^e over these (y vertex, e) pairs.
    std::vector<std::pair<std::size_t, std::int64_t>> divisors;
};

/// For each selected y -> x_k of multiplicity t: adds t*b arrows x_m -> y for
/// every x_m -> x_k of multiplicity b, adds t*b arrows y -> x_l for every
/// x_k -> x_l, and divides x_k by y^t.
MonomialTransform monomial_transform(const ColoredQuiver& cq, std::size_t k,
                                     TransformReading reading = TransformReading::All);

/// New variable at k computed through the colored quiver: the classical
/// exchange binomial with y as formal frozen variables, specialized at
/// y_ij = 1 + xi_i xi_j and the seed's cluster, divided by x_k and by the
/// transform's y monomial.
SuperLaurentPoly oracle_mutate(const Seed& s, std::size_t k, TransformReading reading = TransformReading::All);

/// Seed-level and quiver-level agreement of the super mutation with the
/// colored mutation followed by the monomial transform.
bool check_reduction(const ExtendedQuiver& q, std::size_t k, TransformReading reading = TransformReading::All);

/// Classical seed of a colored quiver. Cluster entries are commutative Laurent
/// polynomials in x_1..x_n followed by the y variables (n + pair_count ring
/// variables).
struct ColoredSeed {
    ColoredQuiver quiver;
    std::vector<LaurentPoly> cluster;
};

ColoredSeed initial_colored_seed(const ExtendedQuiver& q);
/// Classical exchange at x_k, then the monomial transform of the new seed at k.
ColoredSeed mutate_colored_seed(const ColoredSeed& s, std::size_t k, TransformReading reading = TransformReading::All);
/// Cluster after y_ij -> 1 + xi_i xi_j, over signature (n, m).
std::vector<SuperLaurentPoly> specialize(const ColoredSeed& s);

/// Vertex kinds are tagged: {"n","m","vertices":[{"kind":"x","index":k,
/// "frozen":bool} | {"kind":"y","pair":[i,j]}],"arrows":[[...]]}, one based.
Json colored_to_json(const ColoredQuiver& cq);
ColoredQuiver colored_from_json(const Json& j);

} // namespace supercluster
