#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace supercluster {

/// Maximum number of odd (Grassmann) generators in one signature.
inline constexpr std::size_t kMaxOdd = 32;

/// A product of distinct odd generators xi_{i_1} ... xi_{i_k} with i_1 < ... < i_k,
/// stored as a bit set (bit i = generator i, zero based).
class OddMask {
public:
    constexpr OddMask() = default;

    static constexpr OddMask from_bits(std::uint32_t bits) { return OddMask(bits); }
    static OddMask single(std::size_t index);
    /// Indices must be strictly increasing and below kMaxOdd.
    static OddMask from_indices(std::span<const std::size_t> indices);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_even() const { return size() % 2 == 0; }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr bool disjoint(OddMask other) const { return (bits_ & other.bits_) == 0; }
    /// Highest generator index plus one (0 for the empty mask).
    constexpr std::size_t extent() const { return static_cast<std::size_t>(32 - std::countl_zero(bits_)); }

    std::vector<std::size_t> indices() const;

    constexpr OddMask operator|(OddMask o) const { return OddMask(bits_ | o.bits_); }
    constexpr OddMask operator&(OddMask o) const { return OddMask(bits_ & o.bits_); }
    constexpr OddMask without(OddMask o) const { return OddMask(bits_ & ~o.bits_); }
    friend constexpr bool operator==(OddMask, OddMask) = default;

private:
    constexpr explicit OddMask(std::uint32_t bits) : bits_(bits) {}
    std::uint32_t bits_ = 0;
};

/// Sign s with xi_a * xi_b = s * xi_{a|b}; 0 when a and b share a generator.
int merge_sign(OddMask a, OddMask b);

/// Lexicographic order on the increasing index lists ([] < [1] < [1,2] < [2]).
bool canonical_less(OddMask a, OddMask b);

} // namespace supercluster
