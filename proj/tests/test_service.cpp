#include <catch_amalgamated.hpp>

#include <chrono>
#include <thread>

#include <httplib.h>

#include "linkred/braid.hpp"
#include "linkred/service.hpp"
#include "support.hpp"

using namespace linkred;
using nlohmann::json;

namespace {

std::string graph_body(const std::vector<std::vector<int>>& adj) {
  return json{{"graph", {{"n", adj.size()}, {"adj", adj}}}}.dump();
}

std::string sublink_body(const std::vector<std::vector<int>>& adj, const json& subset) {
  return json{{"graph", {{"n", adj.size()}, {"adj", adj}}}, {"subset", subset}}.dump();
}

}  // namespace

TEST_CASE("reduce") {
  const service::Config cfg;
  auto r = service::handle_reduce(graph_body(testing_support::five_vertex_matrix()), cfg);
  REQUIRE(r.status == 200);
  CHECK(r.body["stats"] == json{{"letters", 20}, {"crossings", 20}, {"components", 5}, {"size", 25}});
  CHECK(r.body["linking"] == testing_support::five_vertex_matrix());
  CHECK(r.body["word"]["letters"] == testing_support::five_vertex_word());
  CHECK(r.body["svg"].get<std::string>().find("<svg") != std::string::npos);

  r = service::handle_reduce(graph_body({{0}}), cfg);
  REQUIRE(r.status == 200);
  CHECK(r.body["word"]["letters"].empty());
  CHECK(r.body["pd"]["free_loops"] == 1);

  r = service::handle_reduce(graph_body({{0, 1}, {0, 0}}), cfg);
  CHECK(r.status == 400);
  CHECK(r.body["error"] == "NotSymmetric");

  r = service::handle_reduce("not json", cfg);
  CHECK(r.status == 400);

  service::Config small;
  small.render_limit = 3;
  r = service::handle_reduce(graph_body(testing_support::five_vertex_matrix()), small);
  CHECK(r.status == 422);
}

TEST_CASE("sublink") {
  const service::Config cfg;
  auto r = service::handle_sublink(sublink_body(testing_support::five_vertex_matrix(), {1, 3, 5}), cfg);
  REQUIRE(r.status == 200);
  CHECK(r.body["independent"] == true);
  CHECK(r.body["trivial"] == "TRUE");
  CHECK(r.body["peel_order"] == json{1, 3, 5});
  CHECK(r.body["svg_highlighted"].is_string());

  r = service::handle_sublink(sublink_body(testing_support::five_vertex_matrix(), {2, 4}), cfg);
  REQUIRE(r.status == 200);
  CHECK(r.body["independent"] == false);
  CHECK(r.body["trivial"] == "FALSE");
  CHECK(r.body["failure_residual"] == json{2, 4});

  r = service::handle_sublink(sublink_body(testing_support::five_vertex_matrix(), json::array()), cfg);
  CHECK(r.status == 400);
  CHECK(r.body["error"] == "EmptySubset");
  r = service::handle_sublink(sublink_body(testing_support::five_vertex_matrix(), "x"), cfg);
  CHECK(r.status == 400);
  r = service::handle_sublink(sublink_body(testing_support::five_vertex_matrix(), {1, 9}), cfg);
  CHECK(r.status == 422);

  service::Config small;
  small.render_limit = 2;
  r = service::handle_sublink(sublink_body(testing_support::five_vertex_matrix(), {1, 3}), small);
  REQUIRE(r.status == 200);
  CHECK(r.body["svg_highlighted"].is_null());
}

TEST_CASE("responses do not depend on request order") {
  const service::Config cfg;
  const auto a = sublink_body(testing_support::five_vertex_matrix(), {1, 3, 5});
  const auto b = graph_body(testing_support::five_vertex_matrix());
  const auto first = service::handle_sublink(a, cfg).body;
  const auto reduce_first = service::handle_reduce(b, cfg).body;
  CHECK(service::handle_sublink(a, cfg).body == first);
  CHECK(service::handle_reduce(b, cfg).body == reduce_first);
}

TEST_CASE("health") {
  const auto r = service::handle_health();
  CHECK(r.status == 200);
  CHECK(r.body["status"] == "ok");
  CHECK(r.body["convention"] == kConventionId);
}

TEST_CASE("live server") {
  httplib::Server server;
  service::Config cfg;
  cfg.allowed_origin = "http://localhost:5173";
  service::install_routes(server, cfg);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(json::parse(health->body)["status"] == "ok");
  CHECK(health->get_header_value("Access-Control-Allow-Origin") == cfg.allowed_origin);

  auto reduce = client.Post("/api/reduce", graph_body(testing_support::five_vertex_matrix()), "application/json");
  REQUIRE(reduce);
  CHECK(reduce->status == 200);
  CHECK(json::parse(reduce->body)["stats"]["size"] == 25);

  auto sub = client.Post("/api/sublink", sublink_body(testing_support::five_vertex_matrix(), {2, 4}),
                         "application/json");
  REQUIRE(sub);
  CHECK(sub->status == 200);
  CHECK(json::parse(sub->body)["trivial"] == "FALSE");

  auto bad = client.Post("/api/reduce", graph_body({{1}}), "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body)["error"] == "NonzeroDiagonal");

  auto pre = client.Options("/api/reduce");
  REQUIRE(pre);
  CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

  server.stop();
  worker.join();
}
