#include <httplib.h>

#include <iostream>

#include "linkred/service.hpp"

int main() {
  const auto config = linkred::service::Config::from_env();
  httplib::Server server;
  linkred::service::install_routes(server, config);
  std::cout << "listening on 0.0.0.0:" << config.port << std::endl;
  return server.listen("0.0.0.0", config.port) ? 0 : 1;
}
