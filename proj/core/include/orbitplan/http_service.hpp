#pragma once

#include <memory>
#include <string>

#include "orbitplan/gateway.hpp"

namespace httplib {
class Server;
}

namespace orbitplan {

struct ServiceConfig {
  std::string bind_address = "0.0.0.0";
  int port = 8080;
  double cache_ttl_s = 3600.0;
  TleProviderConfig provider;
  PipelineConfig pipeline;
};

// Service wrapper so tests can drive the routes on an ephemeral port.
class PlanService {
 public:
  explicit PlanService(ServiceConfig cfg);
  ~PlanService();

  httplib::Server& server();

  // Blocks serving cfg.bind_address:cfg.port.
  bool run();
  void stop();

 private:
  ServiceConfig cfg_;
  PlanCache cache_;
  std::unique_ptr<httplib::Server> server_;
};

// Convenience entry point for the CLI `serve` subcommand.
int http_serve(const ServiceConfig& cfg);

}  // namespace orbitplan
