#include <doctest.h>

#include <thread>
#include <vector>

#include "supercluster/server.hpp"
#include "supercluster/session.hpp"

using namespace supercluster;

namespace {

std::string create_a2_paths(SessionStore& store) {
    const ApiResponse r = store.handle("POST", "/sessions", R"({"builder":"a2_paths"})");
    REQUIRE(r.status == 201);
    return r.body.at("id").get<std::string>();
}

Json mutate_body(int v) { return {{"vertex", v}}; }

} // namespace

TEST_CASE("create and read a session") {
    SessionStore store;
    const std::string id = create_a2_paths(store);
    const ApiResponse r = store.handle("GET", "/sessions/" + id, "");
    CHECK(r.status == 200);
    CHECK(r.body.at("cluster")[0].at("value") == "x1");
    CHECK(r.body.at("mutable") == Json::array({true, true}));
    CHECK(r.body.at("weights") == Json::array({1, 1}));
    CHECK(r.body.at("history").empty());
    CHECK(store.size() == 1);
}

TEST_CASE("mutation example through the API") {
    SessionStore store;
    const std::string id = create_a2_paths(store);
    const ApiResponse r = store.handle("POST", "/sessions/" + id + "/mutate", mutate_body(1).dump());
    REQUIRE(r.status == 200);
    const Json& st = r.body.at("state");
    CHECK(st.at("quiver").at("b")[0][1] == -1);
    const Json& paths = st.at("quiver").at("paths");
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].at("k") == 1);
    CHECK(paths[0].at("mult") == -1);
    CHECK(paths[1].at("k") == 2);
    CHECK(paths[1].at("mult") == 2);
    // x1 x1' = x2 + (1 + xi1 xi2): no even arrow enters x1.
    CHECK(st.at("cluster")[0].at("value") == "x1^-1 + x1^-1*x2 + x1^-1*xi1*xi2");
    CHECK(st.at("history") == Json::array({1}));
    const Json& ex = r.body.at("exchange");
    CHECK(ex.at("vertex") == 1);
    CHECK(ex.at("relation") == "x1 * x1' = 1 + x2 + xi1*xi2");
    CHECK(ex.at("before") == "x1");
}

TEST_CASE("undo restores the previous state exactly") {
    SessionStore store;
    const std::string id = create_a2_paths(store);
    const Json before = store.handle("GET", "/sessions/" + id, "").body;
    store.handle("POST", "/sessions/" + id + "/mutate", mutate_body(1).dump());
    store.handle("POST", "/sessions/" + id + "/mutate", mutate_body(2).dump());
    const Json middle = store.handle("GET", "/sessions/" + id, "").body;
    store.handle("POST", "/sessions/" + id + "/mutate", mutate_body(1).dump());
    ApiResponse r = store.handle("POST", "/sessions/" + id + "/undo", "");
    CHECK(r.status == 200);
    CHECK(r.body == middle);
    store.handle("POST", "/sessions/" + id + "/undo", "");
    r = store.handle("POST", "/sessions/" + id + "/undo", "");
    CHECK(r.body.at("cluster") == before.at("cluster"));
    CHECK(r.body.at("quiver") == before.at("quiver"));
    CHECK(r.body == before);
    CHECK(store.handle("POST", "/sessions/" + id + "/undo", "").status == 409);
}

TEST_CASE("undo depth is bounded") {
    SessionStore store(2);
    const std::string id = create_a2_paths(store);
    for (int t = 0; t < 5; ++t) store.handle("POST", "/sessions/" + id + "/mutate", mutate_body(1 + t % 2).dump());
    CHECK(store.handle("GET", "/sessions/" + id, "").body.at("undo_available") == 2);
    CHECK(store.handle("POST", "/sessions/" + id + "/undo", "").status == 200);
    CHECK(store.handle("POST", "/sessions/" + id + "/undo", "").status == 200);
    CHECK(store.handle("POST", "/sessions/" + id + "/undo", "").status == 409);
}

TEST_CASE("error statuses") {
    SessionStore store;
    const ApiResponse osp = store.handle("POST", "/sessions", R"({"builder":"osp_example"})");
    REQUIRE(osp.status == 201);
    const std::string id = osp.body.at("id").get<std::string>();
    CHECK(osp.body.at("mutable") == Json::array({true, false, false}));
    CHECK(store.handle("POST", "/sessions/" + id + "/mutate", mutate_body(2).dump()).status == 409);
    CHECK(store.handle("POST", "/sessions/" + id + "/mutate", mutate_body(9).dump()).status == 400);
    CHECK(store.handle("POST", "/sessions/" + id + "/mutate", "{").status == 400);
    CHECK(store.handle("POST", "/sessions/" + id + "/mutate", "{}").status == 400);
    CHECK(store.handle("GET", "/sessions/nope", "").status == 404);
    CHECK(store.handle("POST", "/sessions/nope/mutate", mutate_body(1).dump()).status == 404);
    CHECK(store.handle("GET", "/elsewhere", "").status == 404);
    CHECK(store.handle("GET", "/sessions", "").status == 405);
    CHECK(store.handle("POST", "/sessions", R"({"builder":"nothing"})").status == 400);
    CHECK(store.handle("POST", "/sessions", R"({"quiver":{"n":2,"m":0,"b":[[0,1],[1,0]]}})").status == 400);
    CHECK(store.handle("POST", "/sessions", R"({"other":1})").status == 400);
    // The osp quiver is not aquiv-shaped.
    CHECK(store.handle("GET", "/sessions/" + id + "/frieze", "").status == 409);
    CHECK(store.handle("DELETE", "/sessions/" + id, "").status == 200);
    CHECK(store.handle("GET", "/sessions/" + id, "").status == 404);
}

TEST_CASE("create from quiver and seed JSON") {
    SessionStore store;
    const Json q = quiver_to_json(build_somos4_a());
    const ApiResponse a = store.handle("POST", "/sessions", Json{{"quiver", q}}.dump());
    REQUIRE(a.status == 201);
    CHECK(a.body.at("weights") == Json::array({1, 0, 0, -1}));
    const Seed s = mutation_sequence(Seed(build_a2_paths()), {0, 1});
    const ApiResponse b = store.handle("POST", "/sessions", Json{{"seed", seed_to_json(s)}}.dump());
    REQUIRE(b.status == 201);
    CHECK(b.body.at("history") == Json::array({1, 2}));
    CHECK(a.body.at("id") != b.body.at("id"));
}

TEST_CASE("frieze view") {
    SessionStore store;
    const ApiResponse c = store.handle("POST", "/sessions", R"({"builder":"aquiv2"})");
    REQUIRE(c.status == 201);
    const std::string id = c.body.at("id").get<std::string>();
    const ApiResponse r = store.handle("GET", "/sessions/" + id + "/frieze", "");
    REQUIRE(r.status == 200);
    CHECK(r.body.at("width") == 2);
    CHECK(r.body.at("frieze").at("period") == 5);
    CHECK(r.body.at("text").get<std::string>().find("x1") != std::string::npos);
}

TEST_CASE("concurrent sessions") {
    SessionStore store;
    std::vector<std::string> ids;
    for (int t = 0; t < 4; ++t) ids.push_back(create_a2_paths(store));
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&store, &ids, t] {
            for (int step = 0; step < 10; ++step) {
                store.handle("POST", "/sessions/" + ids[static_cast<std::size_t>(t)] + "/mutate",
                             mutate_body(1 + step % 2).dump());
                store.handle("POST", "/sessions/" + ids[0] + "/mutate", mutate_body(1).dump());
            }
        });
    }
    for (auto& th : threads) th.join();
    // Session 0 saw 10 of its own steps and 40 interleaved mutations at 1.
    CHECK(store.handle("GET", "/sessions/" + ids[0], "").body.at("history").size() == 50);
    const Json h1 = store.handle("GET", "/sessions/" + ids[1], "").body.at("history");
    CHECK(h1 == Json::array({1, 2, 1, 2, 1, 2, 1, 2, 1, 2}));
}

TEST_CASE("HTTP round trip") {
    SessionStore store;
    httplib::Server server;
    install_routes(server, store);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto health = client.Get("/health");
    REQUIRE(health);
    CHECK(health->status == 200);

    auto created = client.Post("/sessions", R"({"builder":"a2_paths"})", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    const std::string id = Json::parse(created->body).at("id").get<std::string>();

    auto mutated = client.Post(("/sessions/" + id + "/mutate").c_str(), R"({"vertex":1})", "application/json");
    REQUIRE(mutated);
    CHECK(mutated->status == 200);
    CHECK(Json::parse(mutated->body).at("state").at("quiver").at("paths")[1].at("mult") == 2);

    auto frozen = client.Post("/sessions", R"({"builder":"osp_example"})", "application/json");
    const std::string oid = Json::parse(frozen->body).at("id").get<std::string>();
    auto refused = client.Post(("/sessions/" + oid + "/mutate").c_str(), R"({"vertex":3})", "application/json");
    REQUIRE(refused);
    CHECK(refused->status == 409);
    CHECK(Json::parse(refused->body).contains("error"));

    auto missing = client.Get("/sessions/none");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto undone = client.Post(("/sessions/" + id + "/undo").c_str(), "", "application/json");
    REQUIRE(undone);
    CHECK(Json::parse(undone->body).at("history").empty());

    server.stop();
    th.join();
}

TEST_CASE("default port from the environment") {
    ::setenv("SUPERCLUSTER_PORT", "9123", 1);
    CHECK(default_port() == 9123);
    ::setenv("SUPERCLUSTER_PORT", "not-a-port", 1);
    CHECK(default_port() == 8080);
    ::unsetenv("SUPERCLUSTER_PORT");
    CHECK(default_port() == 8080);
}
