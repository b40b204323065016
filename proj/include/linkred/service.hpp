#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace httplib {
class Server;
}

namespace linkred::service {

struct Config {
  int port = 8080;
  /// Largest graph rendered to SVG; /api/reduce refuses larger ones.
  int render_limit = 30;
  std::string allowed_origin = "*";

  /// Reads PORT, RENDER_LIMIT and ALLOWED_ORIGIN, keeping defaults for
  /// unset or unparsable values.
  static Config from_env();
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// POST /api/reduce with body { "graph": {...} }.
Response handle_reduce(const std::string& body, const Config& config);
/// POST /api/sublink with body { "graph": {...}, "subset": [...] }.
Response handle_sublink(const std::string& body, const Config& config);
/// GET /api/health.
Response handle_health();

/// Registers the routes and CORS handling on `server`.
void install_routes(httplib::Server& server, const Config& config);

}  // namespace linkred::service
