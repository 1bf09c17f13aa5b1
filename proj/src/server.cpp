#include "supercluster/server.hpp"

#include <cstdlib>
#include <string>

namespace supercluster {

void install_routes(httplib::Server& server, SessionStore& store) {
    auto forward = [&store](const httplib::Request& req, httplib::Response& res) {
        const ApiResponse r = store.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"ok":true})", "application/json");
    });
    const char* pattern = R"(/sessions(/.*)?)";
    server.Get(pattern, forward);
    server.Post(pattern, forward);
    server.Delete(pattern, forward);
}

int default_port() {
    const char* env = std::getenv("SUPERCLUSTER_PORT");
    if (env == nullptr) return 8080;
    try {
        std::size_t used = 0;
        const int port = std::stoi(env, &used);
        if (used == std::string(env).size() && port > 0 && port < 65536) return port;
    } catch (const std::exception&) {
    }
    return 8080;
}

} // namespace supercluster
