#include "supercluster/session.hpp"

#include <vector>

#include "supercluster/errors.hpp"
#include "supercluster/superfrieze.hpp"

namespace supercluster {

namespace {

ApiResponse error(int status, const std::string& message) { return {status, {{"error", message}}}; }

std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= path.size()) {
        const std::size_t next = path.find('/', pos);
        const std::size_t end = next == std::string_view::npos ? path.size() : next;
        if (end > pos) parts.emplace_back(path.substr(pos, end - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

Json parse_body(std::string_view body) {
    if (body.empty()) return Json::object();
    try {
        return Json::parse(body);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("request body is not JSON: ") + e.what());
    }
}

void require_valid(const ExtendedQuiver& q) {
    if (const auto problems = validate(q); !problems.empty()) throw InvalidQuiver(problems.front());
}

std::size_t aquiv_width(const ExtendedQuiver& q) {
    if (q.n() == 0 || q.m() != q.n() + 1 || q.n() > 6) return 0;
    return q == build_aquiv(q.n()) ? q.n() : 0;
}

} // namespace

Json seed_state_json(const Seed& s) {
    const ExtendedQuiver& q = s.quiver();
    const VariableNames names = q.display_names();
    Json cluster = Json::array();
    Json mut = Json::array();
    for (std::size_t k = 0; k < q.n(); ++k) {
        cluster.push_back({{"vertex", k + 1}, {"name", names.even[k]}, {"value", render(s.cluster(k), names)}});
        mut.push_back(!q.is_frozen(k));
    }
    Json history = Json::array();
    for (std::size_t k : s.history()) history.push_back(k + 1);
    Json out{{"quiver", quiver_to_json(q)}, {"cluster", cluster}, {"mutable", mut}, {"history", history}};
    if (q.m() == 2) out["weights"] = weight_function(q);
    return out;
}

SessionStore::SessionStore(std::size_t undo_depth) : undo_depth_(undo_depth) {}

std::size_t SessionStore::size() const {
    std::lock_guard lock(mu_);
    return sessions_.size();
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
    std::lock_guard lock(mu_);
    const auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse SessionStore::handle(std::string_view method, std::string_view path, std::string_view body) {
    try {
        const std::vector<std::string> parts = split_path(path);
        if (parts.empty() || parts[0] != "sessions" || parts.size() > 3) return error(404, "no such route");
        if (parts.size() == 1) {
            if (method != "POST") return error(405, "use POST /sessions");
            return create(body);
        }
        const std::string& id = parts[1];
        if (parts.size() == 2 && method == "DELETE") {
            std::lock_guard lock(mu_);
            if (sessions_.erase(id) == 0) return error(404, "unknown session '" + id + "'");
            return {200, {{"deleted", id}}};
        }
        const auto session = find(id);
        if (!session) return error(404, "unknown session '" + id + "'");
        std::lock_guard lock(session->mu);
        if (parts.size() == 2) {
            if (method != "GET") return error(405, "use GET or DELETE on a session");
            return state(id, *session);
        }
        const std::string& action = parts[2];
        if (action == "mutate" || action == "undo") {
            if (method != "POST") return error(405, "use POST for " + action);
            return action == "mutate" ? mutate(id, *session, body) : undo(id, *session);
        }
        if (action == "frieze") {
            if (method != "GET") return error(405, "use GET for frieze");
            return frieze(*session);
        }
        return error(404, "no such route");
    } catch (const FrozenVertex& e) {
        return error(409, e.what());
    } catch (const NotDivisible& e) {
        return error(500, e.what());
    } catch (const Error& e) {
        return error(400, e.what());
    } catch (const Json::exception& e) {
        return error(400, e.what());
    }
}

ApiResponse SessionStore::create(std::string_view body) {
    const Json j = parse_body(body);
    Seed seed;
    if (j.contains("builder")) {
        if (!j["builder"].is_string()) throw ParseError("\"builder\" must be a string");
        seed = Seed(build_named(j["builder"].get<std::string>()));
    } else if (j.contains("seed")) {
        seed = seed_from_json(j["seed"]);
    } else if (j.contains("quiver")) {
        seed = Seed(quiver_from_json(j["quiver"]));
    } else {
        throw ParseError("expected \"quiver\", \"seed\" or \"builder\"");
    }
    require_valid(seed.quiver());

    auto session = std::make_shared<Session>();
    session->initial = seed;
    session->seed = std::move(seed);
    std::string id;
    {
        std::lock_guard lock(mu_);
        id = "s" + std::to_string(next_id_++);
        sessions_.emplace(id, session);
    }
    std::lock_guard lock(session->mu);
    ApiResponse r = state(id, *session);
    r.status = 201;
    return r;
}

ApiResponse SessionStore::state(const std::string& id, Session& s) const {
    Json body = seed_state_json(s.seed);
    body["id"] = id;
    body["undo_available"] = s.undo.size();
    return {200, std::move(body)};
}

ApiResponse SessionStore::mutate(const std::string& id, Session& s, std::string_view body) {
    const Json j = parse_body(body);
    if (!j.contains("vertex") || !j["vertex"].is_number_integer()) throw ParseError("expected {\"vertex\": k}");
    const long long v = j["vertex"].get<long long>();
    const ExtendedQuiver& q = s.seed.quiver();
    if (v < 1 || v > static_cast<long long>(q.n())) {
        throw IndexOutOfRange("vertex " + std::to_string(v) + " is not an even vertex 1.." + std::to_string(q.n()));
    }
    const std::size_t k = static_cast<std::size_t>(v - 1);
    if (q.is_frozen(k)) throw FrozenVertex("vertex " + std::to_string(v) + " is frozen");

    const VariableNames names = q.display_names();
    const SuperLaurentPoly local = exchange_numerator(Seed(q), k);
    Seed next = mutate_seed(s.seed, k);
    Json exchange{{"vertex", v},
                  {"relation", names.even[k] + " * " + names.even[k] + "' = " + render(local, names)},
                  {"numerator", render(exchange_numerator(s.seed, k), q.display_names())},
                  {"before", render(s.seed.cluster(k), names)},
                  {"after", render(next.cluster(k), names)}};

    s.undo.push_back(std::move(s.seed));
    if (s.undo.size() > undo_depth_) s.undo.pop_front();
    s.seed = std::move(next);
    ApiResponse r = state(id, s);
    r.body = {{"state", std::move(r.body)}, {"exchange", std::move(exchange)}};
    return r;
}

ApiResponse SessionStore::undo(const std::string& id, Session& s) {
    if (s.undo.empty()) return error(409, "nothing to undo");
    s.seed = std::move(s.undo.back());
    s.undo.pop_back();
    return state(id, s);
}

ApiResponse SessionStore::frieze(Session& s) const {
    const std::size_t m = aquiv_width(s.initial.quiver());
    if (m == 0) return error(409, "the session did not start from an aquiv quiver of width at most 6");
    const SuperFrieze F = generate_symbolic(m);
    const long n = static_cast<long>(F.period());
    return {200,
            {{"width", m},
             {"frieze", frieze_to_json(F)},
             {"text", render_frieze(F, s.initial.quiver().display_names(), 0, n - 1)}}};
}

} // namespace supercluster
