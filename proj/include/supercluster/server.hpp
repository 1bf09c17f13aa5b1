#pragma once

#include <httplib.h>

#include "supercluster/session.hpp"

namespace supercluster {

/// Forwards every request under /sessions to store.handle and answers
/// GET /health. Responses are JSON.
void install_routes(httplib::Server& server, SessionStore& store);

/// SUPERCLUSTER_PORT when it holds a port number, otherwise 8080.
int default_port();

} // namespace supercluster
