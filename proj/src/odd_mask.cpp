#include "supercluster/odd_mask.hpp"

#include <string>

#include "supercluster/errors.hpp"

namespace supercluster {

OddMask OddMask::single(std::size_t index) {
    if (index >= kMaxOdd) throw IndexOutOfRange("odd generator index " + std::to_string(index));
    return OddMask(std::uint32_t{1} << index);
}

OddMask OddMask::from_indices(std::span<const std::size_t> indices) {
    std::uint32_t bits = 0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= kMaxOdd) throw IndexOutOfRange("odd generator index " + std::to_string(indices[k]));
        if (k > 0 && indices[k] <= indices[k - 1]) throw ParseError("odd indices must be strictly increasing");
        bits |= std::uint32_t{1} << indices[k];
    }
    return OddMask(bits);
}

std::vector<std::size_t> OddMask::indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

int merge_sign(OddMask a, OddMask b) {
    if (!a.disjoint(b)) return 0;
    unsigned inversions = 0;
    for (std::uint32_t t = b.bits(); t != 0; t &= t - 1) {
        const unsigned pos = static_cast<unsigned>(std::countr_zero(t));
        const std::uint32_t above = pos == 31 ? 0 : ~((std::uint32_t{2} << pos) - 1);
        inversions += static_cast<unsigned>(std::popcount(a.bits() & above));
    }
    return (inversions & 1U) ? -1 : 1;
}

bool canonical_less(OddMask a, OddMask b) {
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const unsigned d = static_cast<unsigned>(std::countr_zero(diff));
    const std::uint32_t above = d == 31 ? 0 : ~((std::uint32_t{2} << d) - 1);
    if (a.contains(d)) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

} // namespace supercluster
