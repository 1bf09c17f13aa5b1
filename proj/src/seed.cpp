#include "supercluster/seed.hpp"

#include "supercluster/classical.hpp"
#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

SuperLaurentPoly odd_pair_unit(Signature sig, std::size_t i, std::size_t j) {
    return SuperLaurentPoly::constant(sig, 1) + SuperLaurentPoly::odd_var(sig, i) * SuperLaurentPoly::odd_var(sig, j);
}

} // namespace

Seed::Seed(ExtendedQuiver quiver) : quiver_(std::move(quiver)) {
    const Signature sig = quiver_.signature();
    for (std::size_t k = 0; k < sig.even; ++k) cluster_.push_back(SuperLaurentPoly::even_var(sig, k));
}

Seed::Seed(ExtendedQuiver quiver, std::vector<SuperLaurentPoly> cluster, std::vector<std::size_t> history)
    : quiver_(std::move(quiver)), cluster_(std::move(cluster)), history_(std::move(history)) {
    if (cluster_.size() != quiver_.n()) throw InvalidQuiver("one cluster entry per even vertex is required");
    for (const auto& c : cluster_) {
        if (c.signature() != quiver_.signature()) throw SignatureError("cluster entry has the wrong signature");
        if (!is_even_element(c)) throw ParityError("cluster entries must be even");
    }
    for (std::size_t k : history_) {
        if (k >= quiver_.n()) throw IndexOutOfRange("history vertex out of range");
    }
}

SuperLaurentPoly exchange_numerator(const Seed& s, std::size_t k) {
    const ExtendedQuiver& q = s.quiver();
    if (k >= q.n()) throw IndexOutOfRange("vertex " + std::to_string(k + 1) + " out of range");
    if (q.is_frozen(k)) throw FrozenVertex("vertex " + std::to_string(k + 1) + " is frozen");
    const Signature sig = q.signature();
    SuperLaurentPoly out = SuperLaurentPoly::constant(sig, 1);
    SuperLaurentPoly in = SuperLaurentPoly::constant(sig, 1);
    for (std::size_t l = 0; l < q.n(); ++l) {
        if (q.b(k, l) > 0) out *= s.cluster(l).pow(static_cast<unsigned>(q.b(k, l)));
        if (q.b(l, k) > 0) in *= s.cluster(l).pow(static_cast<unsigned>(q.b(l, k)));
    }
    for (const auto& [key, mult] : q.paths()) {
        if (key.k == k) in *= unit_pow(odd_pair_unit(sig, key.i, key.j), mult);
    }
    return out + in;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    SuperLaurentPoly e = exchange_numerator(s, k);
    Seed r = s;
    r.quiver_ = mutate(s.quiver(), k);
    r.cluster_[k] = exact_div(e, s.cluster(k));
    r.history_.push_back(k);
    return r;
}

Seed mutation_sequence(const Seed& s, const std::vector<std::size_t>& ks) {
    Seed r = s;
    for (std::size_t k : ks) r = mutate_seed(r, k);
    return r;
}

bool check_laurent(const Seed& s) {
    for (const auto& c : s.cluster()) {
        if (c.signature() != s.signature() || !c.is_canonical()) return false;
    }
    return true;
}

bool check_laurent(const std::vector<SuperRational>& values) {
    for (const auto& v : values) {
        const SuperRational r = v.simplified();
        if (!(r.den() == SuperLaurentPoly::constant(r.signature(), 1))) return false;
    }
    return true;
}

bool classical_limit_check(const Seed& s, const std::vector<std::size_t>& ks) {
    const Seed sup = mutation_sequence(s, ks);

    const ExtendedQuiver& q = s.quiver();
    std::vector<std::vector<std::int64_t>> b(q.n(), std::vector<std::int64_t>(q.n()));
    std::vector<bool> frozen(q.n());
    for (std::size_t i = 0; i < q.n(); ++i) {
        frozen[i] = q.is_frozen(i);
        for (std::size_t j = 0; j < q.n(); ++j) b[i][j] = q.b(i, j);
    }
    classical::Seed cs = classical::initial_seed(b, frozen);
    for (std::size_t i = 0; i < q.n(); ++i) cs.cluster[i] = classical::from_laurent(s.cluster(i).body());
    try {
        for (std::size_t k : ks) cs = classical::mutate(cs, k);
    } catch (const NotDivisible&) {
        return false;
    }
    for (std::size_t i = 0; i < q.n(); ++i) {
        if (!(classical::to_laurent(cs.cluster[i], q.n()) == sup.cluster(i).body())) return false;
    }
    return true;
}

std::string render_dual(const SuperLaurentPoly& value) {
    const Signature sig = value.signature();
    if (sig.odd < 2) throw SignatureError("dual-number rendering needs two odd generators");
    const OddMask eps = OddMask::from_bits(3);
    Integer a = 0, b = 0;
    for (const auto& t : value.terms()) {
        for (std::size_t i = 0; i < sig.even; ++i) {
            if (t.xexp[i] != 0) throw SignatureError("value is not a constant");
        }
        if (t.odd.empty()) {
            a = t.coeff;
        } else if (t.odd == eps) {
            b = t.coeff;
        } else {
            throw SignatureError("value is not in Z[xi1 xi2]");
        }
    }
    if (b == 0) return a.str();
    std::string eps_part = (b == 1 || b == -1) ? "ε" : Integer(b < 0 ? -b : b).str() + "ε";
    if (a == 0) return (b < 0 ? "-" : "") + eps_part;
    return a.str() + (b < 0 ? "-" : "+") + eps_part;
}

Json seed_to_json(const Seed& s) {
    Json j = quiver_to_json(s.quiver());
    Json cluster = Json::array();
    for (const auto& c : s.cluster()) cluster.push_back(poly_to_json(c));
    j["cluster"] = std::move(cluster);
    Json history = Json::array();
    for (std::size_t k : s.history()) history.push_back(k + 1);
    j["history"] = std::move(history);
    return j;
}

Seed seed_from_json(const Json& j) {
    ExtendedQuiver q = quiver_from_json(j);
    if (!j.contains("cluster")) {
        if (j.contains("history") && !j["history"].empty()) throw ParseError("history given without a cluster");
        return Seed(std::move(q));
    }
    if (!j["cluster"].is_array() || j["cluster"].size() != q.n()) {
        throw ParseError("\"cluster\" must hold one polynomial per even vertex");
    }
    std::vector<SuperLaurentPoly> cluster;
    for (const auto& c : j["cluster"]) cluster.push_back(poly_from_json(c, q.signature()));
    std::vector<std::size_t> history;
    if (j.contains("history")) {
        if (!j["history"].is_array()) throw ParseError("\"history\" must be an array");
        for (const auto& h : j["history"]) {
            if (!h.is_number_integer() || h.get<long long>() < 1 || h.get<long long>() > static_cast<long long>(q.n())) {
                throw ParseError("history entries must be vertices 1..n");
            }
            history.push_back(h.get<std::size_t>() - 1);
        }
    }
    try {
        return Seed(std::move(q), std::move(cluster), std::move(history));
    } catch (const ParityError& e) {
        throw ParseError(e.what());
    }
}

} // namespace supercluster
