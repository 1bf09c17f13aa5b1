#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supercluster/poly_io.hpp"
#include "supercluster/super_poly.hpp"

namespace supercluster {

/// 2-path key (odd i < odd j, even k), all zero based.
struct PathKey {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    friend auto operator<=>(const PathKey&, const PathKey&) = default;
};

/// Quiver on n even and m odd vertices. b(i,j) counts arrows x_i -> x_j minus
/// arrows x_j -> x_i; path(i,j,k) counts 2-paths xi_i -> x_k -> xi_j, with
/// negative values for the opposite orientation.
class ExtendedQuiver {
public:
    ExtendedQuiver() = default;
    ExtendedQuiver(std::size_t n, std::size_t m);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    Signature signature() const { return {n_, m_}; }

    std::int64_t b(std::size_t i, std::size_t j) const;
    /// Sets b(i,j) = count and b(j,i) = -count.
    void set_arrows(std::size_t i, std::size_t j, std::int64_t count);
    /// Sets a single matrix entry without touching its mirror.
    void set_entry(std::size_t i, std::size_t j, std::int64_t value);

    std::int64_t path(std::size_t i, std::size_t j, std::size_t k) const;
    /// Requires i < j; a zero multiplicity erases the key.
    void set_path(std::size_t i, std::size_t j, std::size_t k, std::int64_t mult);
    const std::map<PathKey, std::int64_t>& paths() const { return paths_; }

    bool is_frozen(std::size_t k) const;
    void set_frozen(std::size_t k, bool frozen = true);

    /// Optional display names; empty means the standard x1.., xi1.. names.
    const VariableNames& names() const { return names_; }
    void set_names(VariableNames names);
    VariableNames display_names() const;

    /// Structural equality (names are ignored).
    friend bool operator==(const ExtendedQuiver& a, const ExtendedQuiver& b);

private:
    void check_even(std::size_t k) const;
    void check_odd(std::size_t i) const;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::int64_t> b_;
    std::map<PathKey, std::int64_t> paths_;
    std::vector<bool> frozen_;
    VariableNames names_;
};

/// Problems with skew-symmetry, the diagonal, index ranges and path keys; empty
/// when the quiver is valid.
std::vector<std::string> validate(const ExtendedQuiver& q);
bool is_valid(const ExtendedQuiver& q);

ExtendedQuiver mutate(const ExtendedQuiver& q, std::size_t k);

using WeightFunction = std::vector<std::int64_t>;

WeightFunction weight_function(const ExtendedQuiver& q);
/// w'(i) = w(i) + [b_ki]_+ w(k) for i != k, w'(k) = -w(k); b is read from q.
WeightFunction mutate_weight(const WeightFunction& w, const ExtendedQuiver& q, std::size_t k);

/// Renames vertex i to perm[i].
ExtendedQuiver relabel(const ExtendedQuiver& q, const std::vector<std::size_t>& perm);
bool is_period_one(const ExtendedQuiver& q, std::size_t k, const std::vector<std::size_t>& perm);
/// perm[i] = i - 1 mod n.
std::vector<std::size_t> cyclic_shift(std::size_t n);

/// somos4_a, somos4_b, osp_example, a2, a2_paths, aquiv(m) or aquivM.
ExtendedQuiver build_named(const std::string& name);
ExtendedQuiver build_somos4_a();
ExtendedQuiver build_somos4_b();
ExtendedQuiver build_osp_example();
ExtendedQuiver build_a2();
ExtendedQuiver build_a2_paths();
ExtendedQuiver build_aquiv(std::size_t m);

/// JSON uses one-based vertex numbers throughout.
Json quiver_to_json(const ExtendedQuiver& q);
/// Parses without validating skew-symmetry; path keys must still satisfy i < j.
ExtendedQuiver quiver_from_json(const Json& j);

} // namespace supercluster
