#include "linkred/service.hpp"

#include <cstdlib>

#include <httplib.h>

#include "linkred/error.hpp"
#include "linkred/reduction.hpp"
#include "linkred/render.hpp"
#include "linkred/wire.hpp"

namespace linkred::service {

using nlohmann::json;

namespace {

Response error(int status, const std::string& code, const std::string& detail) {
  return {status, {{"error", code}, {"detail", detail}}};
}

Response error(int status, const Error& e) {
  return error(status, std::string(name(e.code())), e.what());
}

int env_int(const char* key, int fallback) {
  const char* raw = std::getenv(key);
  if (!raw) return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  return (end && *end == '\0' && v > 0) ? static_cast<int>(v) : fallback;
}

// Parses the body and its "graph" field; on failure fills `failure`.
bool read_graph(const std::string& body, json& parsed, Graph& graph, Response& failure) {
  parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    failure = error(400, "MalformedInput", "body is not a JSON object");
    return false;
  }
  if (!parsed.contains("graph")) {
    failure = error(400, "MalformedInput", "missing field 'graph'");
    return false;
  }
  try {
    graph = wire::graph_from_json(parsed.at("graph"));
  } catch (const Error& e) {
    failure = error(400, e);
    return false;
  }
  return true;
}

}  // namespace

Config Config::from_env() {
  Config c;
  c.port = env_int("PORT", c.port);
  c.render_limit = env_int("RENDER_LIMIT", c.render_limit);
  if (const char* origin = std::getenv("ALLOWED_ORIGIN")) c.allowed_origin = origin;
  return c;
}

Response handle_reduce(const std::string& body, const Config& config) {
  json parsed;
  Graph g = Graph::edgeless(1);
  Response failure;
  if (!read_graph(body, parsed, g, failure)) return failure;
  if (g.n() > config.render_limit) {
    return error(422, "RenderLimitExceeded", std::to_string(g.n()) + " vertices exceeds the limit of " +
                                                 std::to_string(config.render_limit));
  }
  const auto inst = make_instance(g);
  const auto lk = linking_matrix(inst.link);
  if (!lk.equals_adjacency(g)) {
    return error(500, "LinkingIdentityFailed", "linking matrix differs from the adjacency matrix");
  }
  const int crossings = inst.link.crossing_count();
  const int components = inst.link.component_count();
  return {200,
          {{"word", wire::to_json(inst.word)},
           {"pd", wire::to_json(inst.link)},
           {"linking", wire::to_json(lk)},
           {"svg", to_svg(layout_closure(inst.word))},
           {"stats",
            {{"letters", inst.word.length()},
             {"crossings", crossings},
             {"components", components},
             {"size", crossings + components}}}}};
}

Response handle_sublink(const std::string& body, const Config& config) {
  json parsed;
  Graph g = Graph::edgeless(1);
  Response failure;
  if (!read_graph(body, parsed, g, failure)) return failure;
  if (!parsed.contains("subset")) return error(400, "MalformedInput", "missing field 'subset'");
  VertexSubset subset;
  try {
    subset = wire::subset_from_json(parsed.at("subset"));
  } catch (const Error& e) {
    return error(400, e);
  }
  if (subset.empty()) return error(400, "EmptySubset", "subset must be nonempty");
  if (subset.max() > g.n()) {
    return error(422, "IndexOutOfRange", "vertex " + std::to_string(subset.max()) +
                                             " outside 1.." + std::to_string(g.n()));
  }

  const auto word = build_braid_word(g);
  const auto link = trace_closure(word);
  const bool independent = is_independent_set(g, subset);
  const Verdict trivial = is_trivial_layered(link, subset);
  const bool agree = (trivial == Verdict::True && independent) ||
                     (trivial == Verdict::False && !independent);
  if (!agree) {
    return error(500, "OracleDisagreement",
                 "independent=" + std::string(independent ? "true" : "false") +
                     " but trivial=" + to_string(trivial));
  }
  const auto split = layered_split_order(link, subset);
  json out{{"independent", independent}, {"trivial", to_string(trivial)}};
  if (split.success) {
    out["peel_order"] = split.order;
  } else {
    out["failure_residual"] = wire::to_json(split.residual);
  }
  if (g.n() <= config.render_limit) {
    RenderOptions options;
    options.highlight = subset.members();
    out["svg_highlighted"] = to_svg(layout_closure(word), options);
  } else {
    out["svg_highlighted"] = nullptr;
  }
  return {200, out};
}

Response handle_health() { return {200, {{"status", "ok"}, {"convention", kConventionId}}}; }

void install_routes(httplib::Server& server, const Config& config) {
  const std::string origin = config.allowed_origin;
  auto send = [origin](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_content(r.body.dump(), "application/json");
  };
  server.Options(R"(/api/.*)", [origin](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
  server.Get("/api/health", [send](const httplib::Request&, httplib::Response& res) {
    send(res, handle_health());
  });
  server.Post("/api/reduce", [send, config](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_reduce(req.body, config));
  });
  server.Post("/api/sublink", [send, config](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_sublink(req.body, config));
  });
}

}  // namespace linkred::service
