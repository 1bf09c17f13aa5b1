#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "supercluster/poly_io.hpp"
#include "supercluster/seed.hpp"

namespace supercluster {

struct ApiResponse {
    int status = 200;
    Json body;
};

/// State payload: quiver JSON, rendered cluster, per-vertex mutability,
/// history (one based) and, when the quiver has two odd vertices, the weight
/// function.
Json seed_state_json(const Seed& s);

/// In-memory sessions behind the HTTP API. Routes (ids are opaque strings):
///   POST   /sessions                {"quiver":..} | {"seed":..} | {"builder":"a2_paths"}
///   GET    /sessions/{id}
///   POST   /sessions/{id}/mutate    {"vertex": k}   (one based)
///   POST   /sessions/{id}/undo
///   GET    /sessions/{id}/frieze    aquiv-shaped sessions only
///   DELETE /sessions/{id}
/// Errors: 400 malformed input, 404 unknown session or route, 405 wrong
/// method, 409 frozen vertex, empty undo stack or a quiver without a frieze.
/// Calls on distinct sessions run concurrently; calls on one session are
/// serialized.
class SessionStore {
public:
    explicit SessionStore(std::size_t undo_depth = 256);

    ApiResponse handle(std::string_view method, std::string_view path, std::string_view body);

    std::size_t size() const;
    std::size_t undo_depth() const { return undo_depth_; }

private:
    struct Session {
        std::mutex mu;
        Seed initial;
        Seed seed;
        std::deque<Seed> undo;
    };

    ApiResponse create(std::string_view body);
    std::shared_ptr<Session> find(const std::string& id) const;
    ApiResponse state(const std::string& id, Session& s) const;
    ApiResponse mutate(const std::string& id, Session& s, std::string_view body);
    ApiResponse undo(const std::string& id, Session& s);
    ApiResponse frieze(Session& s) const;

    std::size_t undo_depth_;
    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t next_id_ = 1;
};

} // namespace supercluster
