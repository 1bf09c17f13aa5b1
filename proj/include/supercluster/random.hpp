#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "supercluster/quiver.hpp"

namespace supercluster {

/// Deterministic generator: the same seed gives the same draws on every
/// platform (no standard distributions involved).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Seed for the index-th instance of a sweep with base seed `base`.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index);

struct RandomQuiverParams {
    std::size_t min_n = 1;
    std::size_t max_n = 5;
    std::size_t max_m = 4;
    std::int64_t max_b = 2;
    std::int64_t max_c = 2;
};

/// n in [min_n, max_n], m in [0, max_m], arrows and 2-path multiplicities
/// uniform in [-max_b, max_b] and [-max_c, max_c]; no frozen vertices.
ExtendedQuiver random_quiver(Rng& rng, const RandomQuiverParams& params);

/// Length uniform in [1, max_len]; vertices uniform among the mutable ones.
std::vector<std::size_t> random_sequence(Rng& rng, const ExtendedQuiver& q, std::size_t max_len);

/// log10 of the largest cluster value met along `seq` when every initial
/// variable is set to 1 and each factor (1 + xi_i xi_j)^c to 2^|c|. With
/// positive coefficients this bounds the coefficient mass, hence the term
/// count, of the symbolic run. Entry t is the bound after t + 1 mutations.
std::vector<double> growth_profile(const ExtendedQuiver& q, std::span<const std::size_t> seq);

struct FuzzInstance {
    ExtendedQuiver quiver;
    std::vector<std::size_t> sequence;
    /// Length drawn before the growth cut; equals sequence.size() when uncut.
    std::size_t drawn_length = 0;
};

/// Instance `index` of the sweep `base`: a random quiver and sequence, with the
/// sequence cut before the first step whose growth bound exceeds
/// 10^max_log10. Pass infinity to disable the cut.
FuzzInstance fuzz_instance(std::uint64_t base, std::uint64_t index, const RandomQuiverParams& params,
                           std::size_t max_len, double max_log10);

} // namespace supercluster
