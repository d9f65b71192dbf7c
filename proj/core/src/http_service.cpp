#include "orbitplan/http_service.hpp"

#include <cstdio>

#include <httplib.h>

#include "orbitplan/errors.hpp"
#include "orbitplan/plan_json.hpp"

namespace orbitplan {

namespace {

using nlohmann::json;

int http_status_for(Errc code) {
  switch (code) {
    case Errc::tle_not_found:
    case Errc::unknown_preset:
      return 404;
    case Errc::tle_network:
    case Errc::tle_malformed_response:
      return 502;
    default:
      return is_planning_failure(code) ? 422 : 400;
  }
}

void write_problem(httplib::Response& res, int status, const std::string& code,
                   const std::string& detail) {
  json j;
  j["status"] = status;
  j["code"] = code;
  j["detail"] = detail;
  res.status = status;
  res.set_content(canonical_dump(j, 2), "application/json");
}

}  // namespace

PlanService::PlanService(ServiceConfig cfg)
    : cfg_(std::move(cfg)), cache_(cfg_.cache_ttl_s),
      server_(std::make_unique<httplib::Server>()) {
  auto& srv = *server_;

  srv.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"status\": \"ok\"}", "application/json");
  });

  srv.Get("/presets", [](const httplib::Request&, httplib::Response& res) {
    json out;
    json list = json::array();
    for (const auto& name : preset_names()) {
      const Workload w = load_preset(name);
      list.push_back({{"name", name},
                      {"steps", static_cast<int>(w.steps.size())},
                      {"summary", preset_summary(name)}});
    }
    out["presets"] = list;
    res.set_content(canonical_dump(out, 2), "application/json");
  });

  srv.Get("/plan", [this](const httplib::Request& req, httplib::Response& res) {
    try {
      if (!req.has_param("norad"))
        fail(Errc::bad_request, "missing required parameter: norad");
      if (!req.has_param("workload"))
        fail(Errc::bad_request, "missing required parameter: workload");

      PlanRequest pr;
      try {
        pr.norad = std::stoi(req.get_param_value("norad"));
      } catch (const std::exception&) {
        fail(Errc::bad_request, "norad must be an integer catalog number");
      }
      const std::string workload = req.get_param_value("workload");
      if (!is_preset(workload))
        fail(Errc::unknown_preset, "unknown preset: " + workload);
      pr.workload_name = workload;
      if (req.has_param("horizon")) {
        try {
          pr.horizon_hours = std::stod(req.get_param_value("horizon"));
        } catch (const std::exception&) {
          fail(Errc::bad_request, "horizon must be a number of hours");
        }
      }
      if (req.has_param("start"))
        pr.start = parse_iso8601(req.get_param_value("start"));
      pr.config = cfg_.pipeline;

      const ExecutionPlan plan = plan_request(pr, cache_, cfg_.provider);
      res.set_header("Cache-Control",
                     "public, max-age=" +
                         std::to_string(static_cast<long>(cfg_.cache_ttl_s)));
      res.set_content(canonical_dump(plan_to_json(plan), 2), "application/json");
    } catch (const Error& e) {
      write_problem(res, http_status_for(e.code()), errc_name(e.code()),
                    e.what());
    } catch (const std::exception& e) {
      write_problem(res, 500, "internal", e.what());
    }
  });
}

PlanService::~PlanService() = default;

httplib::Server& PlanService::server() { return *server_; }

bool PlanService::run() {
  return server_->listen(cfg_.bind_address, cfg_.port);
}

void PlanService::stop() { server_->stop(); }

int http_serve(const ServiceConfig& cfg) {
  PlanService service(cfg);
  std::fprintf(stderr, "listening on %s:%d\n", cfg.bind_address.c_str(),
               cfg.port);
  return service.run() ? 0 : 1;
}

}  // namespace orbitplan
