#include "supercluster/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "supercluster/errors.hpp"

namespace supercluster {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw Error("empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % range);
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ExtendedQuiver random_quiver(Rng& rng, const RandomQuiverParams& params) {
    const auto n = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(params.min_n), static_cast<std::int64_t>(params.max_n)));
    const auto m = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(params.max_m)));
    ExtendedQuiver q(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) q.set_arrows(i, j, rng.uniform(-params.max_b, params.max_b));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k) q.set_path(i, j, k, rng.uniform(-params.max_c, params.max_c));
        }
    }
    return q;
}

std::vector<std::size_t> random_sequence(Rng& rng, const ExtendedQuiver& q, std::size_t max_len) {
    std::vector<std::size_t> mutable_vertices;
    for (std::size_t k = 0; k < q.n(); ++k) {
        if (!q.is_frozen(k)) mutable_vertices.push_back(k);
    }
    if (mutable_vertices.empty() || max_len == 0) return {};
    const auto len = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_len)));
    std::vector<std::size_t> seq;
    for (std::size_t t = 0; t < len; ++t) {
        seq.push_back(mutable_vertices[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(mutable_vertices.size()) - 1))]);
    }
    return seq;
}

namespace {

// log10(10^a + 10^b) without overflow.
double log_add(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log10(1.0 + std::pow(10.0, lo - hi));
}

} // namespace

std::vector<double> growth_profile(const ExtendedQuiver& q, std::span<const std::size_t> seq) {
    const std::size_t n = q.n();
    std::vector<double> value(n, 0.0);
    std::vector<double> profile;
    double peak = 0.0;
    ExtendedQuiver cur = q;
    for (const std::size_t k : seq) {
        double out = 0.0;
        double in = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            const std::int64_t b = cur.b(k, l);
            if (b > 0) out += static_cast<double>(b) * value[l];
            if (b < 0) in += static_cast<double>(-b) * value[l];
        }
        std::int64_t mass = 0;
        for (const auto& [key, c] : cur.paths()) {
            if (key.k == k) mass += c < 0 ? -c : c;
        }
        in += static_cast<double>(mass) * std::log10(2.0);
        value[k] = log_add(out, in) - value[k];
        peak = std::max(peak, value[k]);
        profile.push_back(peak);
        cur = mutate(cur, k);
    }
    return profile;
}

FuzzInstance fuzz_instance(std::uint64_t base, std::uint64_t index, const RandomQuiverParams& params,
                           std::size_t max_len, double max_log10) {
    Rng rng(instance_seed(base, index));
    FuzzInstance inst{random_quiver(rng, params), {}, 0};
    inst.sequence = random_sequence(rng, inst.quiver, max_len);
    inst.drawn_length = inst.sequence.size();
    const std::vector<double> profile = growth_profile(inst.quiver, inst.sequence);
    std::size_t keep = 0;
    while (keep < profile.size() && profile[keep] <= max_log10) ++keep;
    inst.sequence.resize(keep);
    return inst;
}

} // namespace supercluster
