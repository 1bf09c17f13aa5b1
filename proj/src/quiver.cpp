#include "supercluster/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

std::int64_t positive_part(std::int64_t t) { return std::max<std::int64_t>(t, 0); }

std::int64_t sign(std::int64_t t) { return (t > 0) - (t < 0); }

std::size_t json_index(const Json& v, std::size_t bound, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    const auto x = v.get<long long>();
    if (x < 1 || x > static_cast<long long>(bound)) {
        throw ParseError(std::string(what) + " " + std::to_string(x) + " out of range 1.." + std::to_string(bound));
    }
    return static_cast<std::size_t>(x - 1);
}

} // namespace

ExtendedQuiver::ExtendedQuiver(std::size_t n, std::size_t m) : n_(n), m_(m), b_(n * n, 0), frozen_(n, false) {
    if (n > kMaxEven) throw InvalidQuiver("at most " + std::to_string(kMaxEven) + " even vertices supported");
    if (m > kMaxOdd) throw InvalidQuiver("at most " + std::to_string(kMaxOdd) + " odd vertices supported");
}

void ExtendedQuiver::check_even(std::size_t k) const {
    if (k >= n_) throw IndexOutOfRange("even vertex " + std::to_string(k + 1) + " out of range");
}

void ExtendedQuiver::check_odd(std::size_t i) const {
    if (i >= m_) throw IndexOutOfRange("odd vertex " + std::to_string(i + 1) + " out of range");
}

std::int64_t ExtendedQuiver::b(std::size_t i, std::size_t j) const {
    check_even(i);
    check_even(j);
    return b_[i * n_ + j];
}

void ExtendedQuiver::set_arrows(std::size_t i, std::size_t j, std::int64_t count) {
    check_even(i);
    check_even(j);
    if (i == j && count != 0) throw InvalidQuiver("loops are not allowed");
    b_[i * n_ + j] = count;
    b_[j * n_ + i] = -count;
}

void ExtendedQuiver::set_entry(std::size_t i, std::size_t j, std::int64_t value) {
    check_even(i);
    check_even(j);
    b_[i * n_ + j] = value;
}

std::int64_t ExtendedQuiver::path(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = paths_.find({i, j, k});
    return it == paths_.end() ? 0 : it->second;
}

void ExtendedQuiver::set_path(std::size_t i, std::size_t j, std::size_t k, std::int64_t mult) {
    check_odd(i);
    check_odd(j);
    check_even(k);
    if (i >= j) throw InvalidQuiver("2-path keys need i < j");
    if (mult == 0) {
        paths_.erase({i, j, k});
    } else {
        paths_[{i, j, k}] = mult;
    }
}

bool ExtendedQuiver::is_frozen(std::size_t k) const {
    check_even(k);
    return frozen_[k];
}

void ExtendedQuiver::set_frozen(std::size_t k, bool frozen) {
    check_even(k);
    frozen_[k] = frozen;
}

void ExtendedQuiver::set_names(VariableNames names) {
    if ((!names.even.empty() && names.even.size() != n_) || (!names.odd.empty() && names.odd.size() != m_)) {
        throw InvalidQuiver("one name per vertex is required");
    }
    names_ = std::move(names);
}

VariableNames ExtendedQuiver::display_names() const {
    VariableNames out = VariableNames::standard(signature());
    if (!names_.even.empty()) out.even = names_.even;
    if (!names_.odd.empty()) out.odd = names_.odd;
    return out;
}

bool operator==(const ExtendedQuiver& a, const ExtendedQuiver& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.b_ == b.b_ && a.paths_ == b.paths_ && a.frozen_ == b.frozen_;
}

std::vector<std::string> validate(const ExtendedQuiver& q) {
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < q.n(); ++i) {
        if (q.b(i, i) != 0) problems.push_back("b(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is not zero");
        for (std::size_t j = i + 1; j < q.n(); ++j) {
            if (q.b(i, j) != -q.b(j, i)) {
                problems.push_back("b(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and b(" +
                                   std::to_string(j + 1) + "," + std::to_string(i + 1) + ") are not opposite");
            }
        }
    }
    for (const auto& [key, mult] : q.paths()) {
        if (key.i >= key.j || key.j >= q.m() || key.k >= q.n() || mult == 0) {
            problems.push_back("invalid 2-path entry (" + std::to_string(key.i + 1) + "," + std::to_string(key.j + 1) +
                               "," + std::to_string(key.k + 1) + ")");
        }
    }
    return problems;
}

bool is_valid(const ExtendedQuiver& q) { return validate(q).empty(); }

ExtendedQuiver mutate(const ExtendedQuiver& q, std::size_t k) {
    if (k >= q.n()) throw IndexOutOfRange("vertex " + std::to_string(k + 1) + " out of range");
    if (q.is_frozen(k)) throw FrozenVertex("vertex " + std::to_string(k + 1) + " is frozen");
    ExtendedQuiver r = q;
    const std::size_t n = q.n();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t bij = q.b(i, j);
            if (i == k || j == k) {
                r.set_entry(i, j, -bij);
            } else {
                const std::int64_t bik = q.b(i, k);
                r.set_entry(i, j, bij + sign(bik) * positive_part(bik * q.b(k, j)));
            }
        }
    }
    for (const auto& [key, mult] : q.paths()) {
        if (key.k != k) continue;
        r.set_path(key.i, key.j, k, -mult);
        for (std::size_t l = 0; l < n; ++l) {
            if (l == k) continue;
            const std::int64_t add = positive_part(q.b(k, l)) * mult;
            if (add != 0) r.set_path(key.i, key.j, l, q.path(key.i, key.j, l) + add);
        }
    }
    return r;
}

WeightFunction weight_function(const ExtendedQuiver& q) {
    if (q.m() != 2) throw RequiresTwoOddVertices("weight function needs exactly two odd vertices");
    WeightFunction w(q.n());
    for (std::size_t k = 0; k < q.n(); ++k) w[k] = q.path(0, 1, k);
    return w;
}

WeightFunction mutate_weight(const WeightFunction& w, const ExtendedQuiver& q, std::size_t k) {
    if (k >= q.n() || w.size() != q.n()) throw IndexOutOfRange("vertex " + std::to_string(k + 1) + " out of range");
    WeightFunction r = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        r[i] = i == k ? -w[k] : w[i] + positive_part(q.b(k, i)) * w[k];
    }
    return r;
}

ExtendedQuiver relabel(const ExtendedQuiver& q, const std::vector<std::size_t>& perm) {
    const std::size_t n = q.n();
    std::vector<bool> seen(n, false);
    if (perm.size() != n) throw InvalidQuiver("relabeling must cover every even vertex");
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw InvalidQuiver("relabeling is not a bijection");
        seen[p] = true;
    }
    ExtendedQuiver r(n, q.m());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r.set_entry(perm[i], perm[j], q.b(i, j));
        r.set_frozen(perm[i], q.is_frozen(i));
    }
    for (const auto& [key, mult] : q.paths()) r.set_path(key.i, key.j, perm[key.k], mult);
    return r;
}

bool is_period_one(const ExtendedQuiver& q, std::size_t k, const std::vector<std::size_t>& perm) {
    return relabel(mutate(q, k), perm) == q;
}

std::vector<std::size_t> cyclic_shift(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (i + n - 1) % n;
    return perm;
}

ExtendedQuiver build_somos4_a() {
    ExtendedQuiver q(4, 2);
    q.set_arrows(0, 1, 1);
    q.set_arrows(0, 3, 1);
    q.set_arrows(2, 3, 1);
    q.set_arrows(2, 0, 2);
    q.set_arrows(3, 1, 2);
    q.set_arrows(1, 2, 3);
    q.set_path(0, 1, 0, 1);
    q.set_path(0, 1, 3, -1);
    return q;
}

ExtendedQuiver build_somos4_b() {
    ExtendedQuiver a = build_somos4_a();
    ExtendedQuiver q(4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) q.set_entry(i, j, -a.b(i, j));
    }
    const std::int64_t w[4] = {1, 1, -1, -1};
    for (std::size_t k = 0; k < 4; ++k) q.set_path(0, 1, k, w[k]);
    return q;
}

ExtendedQuiver build_osp_example() {
    ExtendedQuiver q(3, 2);
    q.set_arrows(0, 1, 1);
    q.set_arrows(0, 2, 1);
    q.set_path(0, 1, 0, -1);
    q.set_frozen(1);
    q.set_frozen(2);
    q.set_names({{"a", "b", "c"}, {"alpha", "beta"}});
    return q;
}

ExtendedQuiver build_a2() {
    ExtendedQuiver q(2, 0);
    q.set_arrows(0, 1, 1);
    return q;
}

ExtendedQuiver build_a2_paths() {
    ExtendedQuiver q(2, 2);
    q.set_arrows(0, 1, 1);
    q.set_path(0, 1, 0, 1);
    q.set_path(0, 1, 1, 1);
    return q;
}

ExtendedQuiver build_aquiv(std::size_t m) {
    if (m < 1) throw InvalidQuiver("aquiv needs at least one even vertex");
    if (m + 1 > kMaxOdd) throw InvalidQuiver("aquiv width too large");
    ExtendedQuiver q(m, m + 1);
    for (std::size_t k = 0; k + 1 < m; ++k) q.set_arrows(k, k + 1, 1);
    for (std::size_t k = 0; k < m; ++k) {
        q.set_path(k, k + 1, k, -1);
        if (k > 0) q.set_path(k - 1, k, k, 1);
    }
    return q;
}

ExtendedQuiver build_named(const std::string& name) {
    if (name == "somos4_a") return build_somos4_a();
    if (name == "somos4_b") return build_somos4_b();
    if (name == "osp_example") return build_osp_example();
    if (name == "a2") return build_a2();
    if (name == "a2_paths") return build_a2_paths();
    std::string digits;
    if (name.rfind("aquiv(", 0) == 0 && name.size() > 7 && name.back() == ')') {
        digits = name.substr(6, name.size() - 7);
    } else if (name.rfind("aquiv", 0) == 0 && name.size() > 5) {
        digits = name.substr(5);
    }
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 4) {
        return build_aquiv(static_cast<std::size_t>(std::stoul(digits)));
    }
    throw UnknownName("unknown quiver '" + name + "'");
}

Json quiver_to_json(const ExtendedQuiver& q) {
    Json b = Json::array();
    for (std::size_t i = 0; i < q.n(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < q.n(); ++j) row.push_back(q.b(i, j));
        b.push_back(std::move(row));
    }
    Json paths = Json::array();
    for (const auto& [key, mult] : q.paths()) {
        paths.push_back({{"i", key.i + 1}, {"j", key.j + 1}, {"k", key.k + 1}, {"mult", mult}});
    }
    Json frozen = Json::array();
    for (std::size_t k = 0; k < q.n(); ++k) {
        if (q.is_frozen(k)) frozen.push_back(k + 1);
    }
    Json out{{"n", q.n()}, {"m", q.m()}, {"b", std::move(b)}, {"paths", std::move(paths)}, {"frozen", std::move(frozen)}};
    if (!q.names().even.empty() || !q.names().odd.empty()) {
        const VariableNames names = q.display_names();
        out["names"] = {{"even", names.even}, {"odd", names.odd}};
    }
    return out;
}

ExtendedQuiver quiver_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("quiver must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("quiver needs a non-negative \"n\"");
    const std::size_t n = j["n"].get<std::size_t>();
    std::size_t m = 0;
    if (j.contains("m")) {
        if (!j["m"].is_number_unsigned()) throw ParseError("\"m\" must be a non-negative integer");
        m = j["m"].get<std::size_t>();
    }
    if (n > kMaxEven || m > kMaxOdd) throw ParseError("quiver too large");
    ExtendedQuiver q(n, m);
    if (j.contains("b")) {
        const Json& b = j["b"];
        if (!b.is_array() || b.size() != n) throw ParseError("\"b\" must be an n x n matrix");
        for (std::size_t r = 0; r < n; ++r) {
            if (!b[r].is_array() || b[r].size() != n) throw ParseError("\"b\" must be an n x n matrix");
            for (std::size_t c = 0; c < n; ++c) {
                if (!b[r][c].is_number_integer()) throw ParseError("matrix entries must be integers");
                q.set_entry(r, c, b[r][c].get<std::int64_t>());
            }
        }
    } else if (n != 0) {
        throw ParseError("quiver needs a matrix \"b\"");
    }
    if (j.contains("paths")) {
        if (!j["paths"].is_array()) throw ParseError("\"paths\" must be an array");
        for (const auto& p : j["paths"]) {
            if (!p.is_object() || !p.contains("i") || !p.contains("j") || !p.contains("k") || !p.contains("mult")) {
                throw ParseError("2-path entries need i, j, k and mult");
            }
            const std::size_t i = json_index(p["i"], m, "odd vertex");
            const std::size_t jj = json_index(p["j"], m, "odd vertex");
            const std::size_t k = json_index(p["k"], n, "even vertex");
            if (!p["mult"].is_number_integer()) throw ParseError("mult must be an integer");
            if (i >= jj) throw InvalidQuiver("2-path keys need i < j");
            const auto mult = p["mult"].get<std::int64_t>();
            q.set_path(i, jj, k, q.path(i, jj, k) + mult);
        }
    }
    if (j.contains("frozen")) {
        if (!j["frozen"].is_array()) throw ParseError("\"frozen\" must be an array");
        for (const auto& f : j["frozen"]) q.set_frozen(json_index(f, n, "frozen vertex"));
    }
    if (j.contains("names")) {
        const Json& names = j["names"];
        VariableNames vn;
        try {
            if (names.contains("even")) vn.even = names["even"].get<std::vector<std::string>>();
            if (names.contains("odd")) vn.odd = names["odd"].get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception&) {
            throw ParseError("\"names\" must hold string arrays");
        }
        try {
            q.set_names(std::move(vn));
        } catch (const InvalidQuiver& e) {
            throw ParseError(e.what());
        }
    }
    return q;
}

} // namespace supercluster
