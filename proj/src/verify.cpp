#include "supercluster/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "supercluster/colored.hpp"
#include "supercluster/errors.hpp"
#include "supercluster/presymplectic.hpp"
#include "supercluster/seed.hpp"
#include "supercluster/superfrieze.hpp"

namespace supercluster {

namespace {

Json sequence_json(const std::vector<std::size_t>& seq) {
    Json s = Json::array();
    for (std::size_t k : seq) s.push_back(k + 1);
    return s;
}

// Per-instance checks shared by the sweeps and replay.
InstanceResult laurent_instance(const ExtendedQuiver& q, const std::vector<std::size_t>& seq) {
    InstanceResult r;
    Seed s(q);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        try {
            s = mutate_seed(s, seq[t]);
        } catch (const NotDivisible& e) {
            r.failure = counterexample_payload("laurent", q, seq, "step " + std::to_string(t + 1) + ": " + e.what());
            return r;
        }
        ++r.steps;
    }
    if (!check_laurent(s)) r.failure = counterexample_payload("laurent", q, seq, "cluster is not canonical Laurent");
    return r;
}

InstanceResult form_instance(const ExtendedQuiver& q) {
    InstanceResult r;
    const SuperForm w = form_of_quiver(q);
    const Seed s(q);
    for (std::size_t k = 0; k < q.n(); ++k) {
        if (q.is_frozen(k)) continue;
        const SuperForm pulled = pullback_mutation(w, s, k);
        const SuperForm target = form_of_quiver(mutate(q, k));
        ++r.steps;
        if (!forms_equal(pulled, target)) {
            r.failure = counterexample_payload("form", q, {k}, "pulled-back form differs from the form of the mutated quiver");
            return r;
        }
        if (!forms_equal(pulled.odd_odd_part(), SuperForm(q.signature()))) {
            r.failure = counterexample_payload("form", q, {k}, "dxi dxi words survive the pullback");
            return r;
        }
    }
    return r;
}

InstanceResult reduction_instance(const ExtendedQuiver& q, const std::vector<std::size_t>& seq) {
    InstanceResult r;
    Seed s(q);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        const std::size_t k = seq[t];
        const std::string at = "step " + std::to_string(t + 1);
        if (!check_reduction(s.quiver(), k)) {
            r.failure = counterexample_payload("reduction", q, seq, at + ": colored exchange differs from the super exchange");
            return r;
        }
        const Seed next = mutate_seed(s, k);
        if (!(oracle_mutate(s, k) == next.cluster(k))) {
            r.failure = counterexample_payload("reduction", q, seq, at + ": mutate_seed differs from oracle_mutate");
            return r;
        }
        s = next;
        ++r.steps;
    }
    return r;
}

InstanceResult guarded(const std::function<InstanceResult()>& f, const std::string& check, const ExtendedQuiver& q,
                       const std::vector<std::size_t>& seq) {
    try {
        return f();
    } catch (const std::exception& e) {
        InstanceResult r;
        r.failure = counterexample_payload(check, q, seq, std::string("exception: ") + e.what());
        return r;
    }
}

SweepReport aggregate(const std::string& check, const std::vector<InstanceResult>& results) {
    SweepReport rep;
    rep.check = check;
    rep.instances = results.size();
    for (std::size_t i = 0; i < results.size(); ++i) {
        rep.steps += results[i].steps;
        if (results[i].cut) ++rep.cut;
        if (results[i].failure) {
            if (!rep.counterexample) rep.counterexample = *results[i].failure;
            ++rep.failures;
        }
    }
    return rep;
}

std::vector<std::size_t> sequence_from_json(const Json& j, const ExtendedQuiver& q) {
    std::vector<std::size_t> seq;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > static_cast<long long>(q.n())) {
            throw ParseError("sequence entries must be vertices 1..n");
        }
        seq.push_back(v.get<std::size_t>() - 1);
    }
    return seq;
}

} // namespace

Json counterexample_payload(const std::string& check, const ExtendedQuiver& q, const std::vector<std::size_t>& seq,
                           const std::string& reason) {
    return {{"check", check}, {"quiver", quiver_to_json(q)}, {"sequence", sequence_json(seq)}, {"failure", reason}};
}

SweepReport sequence_sweep(const std::string& check, const SweepOptions& opt, const SequenceCheck& instance) {
    const auto results = run_pool(opt.count, opt.workers, [&](std::size_t i) {
        const FuzzInstance fz = fuzz_instance(opt.rng_seed, i, opt.params, opt.max_len, opt.max_log10);
        InstanceResult r = guarded([&] { return instance(fz.quiver, fz.sequence); }, check, fz.quiver, fz.sequence);
        r.cut = fz.sequence.size() < fz.drawn_length;
        if (r.failure) {
            (*r.failure)["rng_seed"] = opt.rng_seed;
            (*r.failure)["index"] = i;
        }
        return r;
    });
    return aggregate(check, results);
}

std::vector<SuperLaurentPoly> somos_terms(std::size_t count, bool super) {
    const ExtendedQuiver full = build_somos4_a();
    ExtendedQuiver q = full;
    if (!super) {
        q = ExtendedQuiver(full.n(), 0);
        for (std::size_t i = 0; i < full.n(); ++i) {
            for (std::size_t j = 0; j < full.n(); ++j) q.set_entry(i, j, full.b(i, j));
        }
    }
    std::vector<SuperLaurentPoly> out;
    const SuperLaurentPoly one = SuperLaurentPoly::constant(q.signature(), 1);
    Seed s(q, std::vector<SuperLaurentPoly>(q.n(), one));
    for (std::size_t t = 0; t < std::min<std::size_t>(count, 4); ++t) out.push_back(one);
    for (std::size_t t = 4; t < count; ++t) {
        const std::size_t k = (t - 4) % 4;
        s = mutate_seed(s, k);
        out.push_back(s.cluster(k));
    }
    return out;
}

std::vector<InstanceResult> run_pool(std::size_t count, std::size_t workers,
                                     const std::function<InstanceResult(std::size_t)>& job) {
    std::vector<InstanceResult> results(count);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) results[i] = job(i);
    };
    if (workers == 1) {
        work();
        return results;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return results;
}

Json SweepReport::to_json() const {
    Json j{{"check", check},     {"instances", instances}, {"steps", steps},
           {"cut", cut},         {"failures", failures},   {"ok", ok()}};
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
}

SweepReport verify_laurent(const SweepOptions& opt) { return sequence_sweep("laurent", opt, laurent_instance); }

SweepReport verify_reduction(const SweepOptions& opt) {
    return sequence_sweep("reduction", opt, reduction_instance);
}

SweepReport verify_form(const SweepOptions& opt) {
    const auto results = run_pool(opt.count, opt.workers, [&](std::size_t i) {
        Rng rng(instance_seed(opt.rng_seed, i));
        const ExtendedQuiver q = random_quiver(rng, opt.params);
        InstanceResult r = guarded([&] { return form_instance(q); }, "form", q, {});
        if (r.failure) {
            (*r.failure)["rng_seed"] = opt.rng_seed;
            (*r.failure)["index"] = i;
        }
        return r;
    });
    return aggregate("form", results);
}

SweepReport verify_frieze(std::size_t width) {
    InstanceResult r;
    auto fail = [&](const std::string& why) {
        r.failure = Json{{"check", "frieze"}, {"width", width}, {"failure", why}};
    };
    try {
        const SuperFrieze F = generate_symbolic(width);
        const FriezeCheck d = check_diamonds(F);
        r.steps += d.checked;
        const FriezeCheck g = check_glide(F);
        r.steps += g.checked;
        if (!d.ok) {
            fail("diamond rule: " + d.failure);
        } else if (!g.ok) {
            fail("glide: " + g.failure);
        } else {
            const SchrodingerSystem sys = extract_schrodinger(F);
            const OSpMatrix M = monodromy(sys, F.signature());
            OSpMatrix expect = OSpMatrix::identity(F.signature());
            expect.a = SuperLaurentPoly::constant(F.signature(), -1);
            expect.d = expect.a;
            if (!(M == expect)) {
                fail("monodromy is not diag(-1,-1,1)");
            } else if (!frieze_vs_seed(width)) {
                fail("frieze diagonal differs from aquiv mutations");
            }
        }
    } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what());
    }
    return aggregate("frieze", {r});
}

SweepReport replay(const Json& p) {
    try {
        const std::string check = p.at("check").get<std::string>();
        if (check == "frieze") return verify_frieze(p.at("width").get<std::size_t>());
        const ExtendedQuiver q = quiver_from_json(p.at("quiver"));
        if (const auto problems = validate(q); !problems.empty()) throw InvalidQuiver(problems.front());
        const std::vector<std::size_t> seq = sequence_from_json(p.at("sequence"), q);
        InstanceResult r;
        if (check == "laurent") {
            r = guarded([&] { return laurent_instance(q, seq); }, check, q, seq);
        } else if (check == "reduction") {
            r = guarded([&] { return reduction_instance(q, seq); }, check, q, seq);
        } else if (check == "form") {
            r = guarded([&] { return form_instance(q); }, check, q, seq);
        } else {
            throw ParseError("unknown check '" + check + "'");
        }
        return aggregate(check, {r});
    } catch (const Json::exception& e) {
        throw ParseError(std::string("counterexample JSON: ") + e.what());
    }
}

} // namespace supercluster
