#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercluster/poly_io.hpp"
#include "supercluster/random.hpp"
#include "supercluster/super_poly.hpp"

namespace supercluster {

/// Somos-4 terms from the quiver somos4_a with every initial value 1,
/// mutating 1, 2, 3, 4, 1, ... The classical run drops the odd vertices.
std::vector<SuperLaurentPoly> somos_terms(std::size_t count, bool super);

struct SweepOptions {
    std::size_t count = 100;
    RandomQuiverParams params;
    std::size_t max_len = 8;
    std::uint64_t rng_seed = 42;
    /// Growth cut passed to fuzz_instance.
    double max_log10 = 40.0;
    /// 0 picks the hardware concurrency.
    std::size_t workers = 0;
};

struct InstanceResult {
    std::size_t steps = 0;
    bool cut = false;
    /// Replayable payload when the instance fails.
    std::optional<Json> failure;
};

/// job(0..count-1) on a pool of threads; results come back in index order
/// whatever the scheduling.
std::vector<InstanceResult> run_pool(std::size_t count, std::size_t workers,
                                     const std::function<InstanceResult(std::size_t)>& job);

struct SweepReport {
    std::string check;
    std::size_t instances = 0;
    std::size_t steps = 0;
    std::size_t cut = 0;
    std::size_t failures = 0;
    /// Lowest failing index.
    std::optional<Json> counterexample;

    bool ok() const { return failures == 0; }
    Json to_json() const;
};

/// {"check","quiver","sequence" (one based),"failure"}; the sweeps add
/// "rng_seed" and "index".
Json counterexample_payload(const std::string& check, const ExtendedQuiver& q, const std::vector<std::size_t>& seq,
                           const std::string& reason);

using SequenceCheck = std::function<InstanceResult(const ExtendedQuiver&, const std::vector<std::size_t>&)>;

/// instance() on fuzz_instance(rng_seed, i, ...) for i < count; exceptions
/// count as failures.
SweepReport sequence_sweep(const std::string& check, const SweepOptions& opt, const SequenceCheck& instance);

/// Random mutation sequences through mutate_seed; fails on NotDivisible or a
/// non-canonical cluster.
SweepReport verify_laurent(const SweepOptions& opt);
/// check_invariance at every mutable vertex of each random quiver, plus
/// vanishing of the d xi d xi words of the pulled-back form.
SweepReport verify_form(const SweepOptions& opt);
/// Along each random sequence: check_reduction at the current quiver and
/// mutate_seed equal to oracle_mutate.
SweepReport verify_reduction(const SweepOptions& opt);
/// Diamond rule, glide, antiperiodicity, Schroedinger diagonals, monodromy
/// diag(-1,-1,1) and agreement with seed mutations of aquiv(width).
SweepReport verify_frieze(std::size_t width);

/// Re-runs one payload {"check","quiver","sequence",...} as emitted in a
/// counterexample. Returns the single-instance report.
SweepReport replay(const Json& payload);

} // namespace supercluster
