// orbitplan CLI: plan, windows, passes, presets, serve.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitplan/errors.hpp"
#include "orbitplan/gateway.hpp"
#include "orbitplan/http_service.hpp"
#include "orbitplan/plan_json.hpp"

namespace {

using namespace orbitplan;
using nlohmann::json;

struct CommonArgs {
  int norad = 0;
  std::string tle_file;
  std::string start = "now";
  double horizon_hours = 12.0;
  std::string config_file;
  std::string format = "json";
  bool offline = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_request, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

UtcTime now_utc() {
  return UtcTime::from_unix_ms(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
}

UtcTime resolve_start(const std::string& text) {
  if (text == "now") return now_utc();
  return parse_iso8601(text);
}

PipelineConfig load_config(const std::string& path) {
  PipelineConfig cfg;
  if (path.empty()) return cfg;
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(Errc::bad_request, std::string("config parse error: ") + e.what());
  }
  if (j.contains("step_s")) cfg.step_s = j["step_s"].get<double>();
  if (j.contains("envelope")) {
    const auto& e = j["envelope"];
    auto& v = cfg.envelope;
    v.sunlit_power_w = e.value("sunlit_power_w", v.sunlit_power_w);
    v.eclipse_power_w = e.value("eclipse_power_w", v.eclipse_power_w);
    v.sunlit_compute = e.value("sunlit_compute", v.sunlit_compute);
    v.eclipse_compute = e.value("eclipse_compute", v.eclipse_compute);
    v.thermal_limit_w = e.value("thermal_limit_w", v.thermal_limit_w);
    v.min_orbit_window_s = e.value("min_orbit_window_s", v.min_orbit_window_s);
    v.min_pass_window_s = e.value("min_pass_window_s", v.min_pass_window_s);
  }
  if (j.contains("placement")) {
    const auto& p = j["placement"];
    auto& v = cfg.placement;
    v.reduction_threshold = p.value("reduction_threshold", v.reduction_threshold);
    v.energy_weight = p.value("energy_weight", v.energy_weight);
    v.thermal_penalty_scale = p.value("thermal_penalty_scale", v.thermal_penalty_scale);
    v.time_occupancy_weight = p.value("time_occupancy_weight", v.time_occupancy_weight);
    v.transfer_time_weight = p.value("transfer_time_weight", v.transfer_time_weight);
    v.transfer_volume_weight = p.value("transfer_volume_weight", v.transfer_volume_weight);
    v.assumed_mean_rate_mbps = p.value("assumed_mean_rate_mbps", v.assumed_mean_rate_mbps);
    v.default_fec_rate = p.value("default_fec_rate", v.default_fec_rate);
  }
  if (j.contains("link")) {
    const auto& l = j["link"];
    auto& v = cfg.link;
    v.frequency_ghz = l.value("frequency_ghz", v.frequency_ghz);
    v.tx_power_dbw = l.value("tx_power_dbw", v.tx_power_dbw);
    v.tx_gain_dbi = l.value("tx_gain_dbi", v.tx_gain_dbi);
    v.rx_gain_dbi = l.value("rx_gain_dbi", v.rx_gain_dbi);
    v.impl_loss_db = l.value("impl_loss_db", v.impl_loss_db);
    v.atm_loss_db = l.value("atm_loss_db", v.atm_loss_db);
    v.rain_margin_db = l.value("rain_margin_db", v.rain_margin_db);
    v.margin_reference_offset_db =
        l.value("margin_reference_offset_db", v.margin_reference_offset_db);
  }
  if (j.contains("stations")) {
    cfg.stations.clear();
    for (const auto& s : j["stations"]) {
      GroundStation g;
      g.id = s.at("id").get<std::string>();
      g.lat_deg = s.at("lat").get<double>();
      g.lon_deg = s.at("lon").get<double>();
      g.alt_km = s.value("alt", 0.0);
      g.provider = s.value("provider", "");
      g.min_elevation_deg = s.value("min_elevation", 5.0);
      cfg.stations.push_back(std::move(g));
    }
  }
  return cfg;
}

TleRecord resolve_tle(const CommonArgs& args) {
  if (!args.tle_file.empty()) {
    TleRecord rec = parse_tle_text(read_file(args.tle_file));
    return rec;
  }
  if (args.offline)
    fail(Errc::bad_request, "--offline requires --tle-file");
  if (args.norad <= 0)
    fail(Errc::bad_request, "either --tle-file or --norad is required");
  return fetch_tle(args.norad, provider_from_env());
}

void print_plan_table(const ExecutionPlan& plan) {
  std::printf("satellite      %s (NORAD %d)\n", plan.satellite.name.c_str(),
              plan.satellite.catalog_number);
  std::printf("workload       %s\n", plan.workload_name.c_str());
  std::printf("start          %s\n", to_iso8601(plan.generated_at).c_str());
  std::printf("horizon        %.1f h\n", plan.horizon_s / 3600.0);
  std::printf("windows        %zu\n", plan.timeline.size());
  std::printf("steps          %d\n", plan.metrics.step_count);
  std::printf("downlink       %.2f MB payload / %.2f MB channel\n",
              plan.metrics.payload_downlink_mb, plan.metrics.channel_downlink_mb);
  std::printf("uplink         %.2f MB payload / %.2f MB channel\n",
              plan.metrics.payload_uplink_mb, plan.metrics.channel_uplink_mb);
  std::printf("makespan       %.0f s\n", plan.metrics.makespan_s);
  std::printf("confidence     %.2f\n", plan.confidence);
  std::printf("hash           %s\n\n", plan.determinism_hash.c_str());
  std::printf("%-28s %-8s %-24s %-24s %s\n", "step", "where", "start", "end",
              "window");
  for (const auto& s : plan.schedule) {
    std::printf("%-28s %-8s %-24s %-24s %s\n", s.step_id.c_str(),
                location_name(s.location), to_iso8601(s.t_start).c_str(),
                to_iso8601(s.t_end).c_str(),
                s.window_id ? std::to_string(*s.window_id).c_str() : "-");
  }
}

void print_windows_table(const std::vector<OrbitalWindow>& windows) {
  std::printf("%-4s %-24s %-24s %-14s %6s %5s %8s %s\n", "id", "start", "end",
              "kind", "P(W)", "c", "R(Mbps)", "station");
  for (const auto& w : windows) {
    std::printf("%-4d %-24s %-24s %-14s %6.1f %5.2f %8.2f %s\n", w.id,
                to_iso8601(w.t_start).c_str(), to_iso8601(w.t_end).c_str(),
                window_kind_name(w.kind), w.power_w, w.compute,
                w.comms_rate_mbps, w.station ? w.station->c_str() : "-");
  }
}

void print_passes_table(const std::vector<PassPrediction>& passes) {
  std::printf("%-4s %-10s %-24s %-24s %7s %8s %9s %10s\n", "id", "station",
              "aos", "los", "peak", "rate", "margin", "capacity");
  for (const auto& p : passes) {
    std::printf("%-4d %-10s %-24s %-24s %6.1f%1s %8.2f %9.2f %10.1f\n", p.id,
                p.station_id.c_str(), to_iso8601(p.aos).c_str(),
                to_iso8601(p.los).c_str(), p.peak_elevation_deg, "",
                p.mean_data_rate_mbps, p.worst_margin_db, p.capacity_mb);
  }
}

int cmd_plan(const CommonArgs& args, const std::string& workload_name,
             const std::string& workload_file) {
  if (workload_name.empty() && workload_file.empty())
    fail(Errc::bad_request, "plan requires --workload or --workload-file");

  PlanRequest req;
  req.norad = args.norad;
  if (!workload_file.empty())
    req.workload = workload_from_json(json::parse(read_file(workload_file)));
  else
    req.workload_name = workload_name;
  req.horizon_hours = args.horizon_hours;
  req.start = resolve_start(args.start);
  req.config = load_config(args.config_file);

  TleRecord rec = resolve_tle(args);
  req.tle = rec;
  const int file_catalog = parse_tle(rec.line1, rec.line2).catalog_number;
  if (req.norad > 0 && !args.tle_file.empty() && req.norad != file_catalog)
    fail(Errc::bad_request,
         "--norad " + std::to_string(req.norad) +
             " does not match the TLE file's catalog number " +
             std::to_string(file_catalog));
  if (req.norad <= 0) req.norad = file_catalog;

  PlanCache cache;
  const ExecutionPlan plan =
      plan_request(req, cache, provider_from_env(), nullptr);
  if (args.format == "table")
    print_plan_table(plan);
  else
    std::fputs(canonical_dump(plan_to_json(plan), 2).c_str(), stdout);
  return 0;
}

int cmd_windows(const CommonArgs& args) {
  const TleRecord rec = resolve_tle(args);
  const Tle tle = parse_tle(rec.line1, rec.line2);
  const PipelineConfig cfg = load_config(args.config_file);
  const auto art = build_environment(tle, resolve_start(args.start),
                                     args.horizon_hours * 3600.0, cfg);
  if (args.format == "table") {
    print_windows_table(art.timeline);
    return 0;
  }
  json out;
  out["satellite"] = tle.catalog_number;
  out["horizon_s"] = args.horizon_hours * 3600.0;
  json windows = json::array();
  for (const auto& w : art.timeline) windows.push_back(window_to_json(w));
  out["windows"] = windows;
  std::fputs(canonical_dump(out, 2).c_str(), stdout);
  return 0;
}

int cmd_passes(const CommonArgs& args) {
  const TleRecord rec = resolve_tle(args);
  const Tle tle = parse_tle(rec.line1, rec.line2);
  const PipelineConfig cfg = load_config(args.config_file);
  const auto art = build_environment(tle, resolve_start(args.start),
                                     args.horizon_hours * 3600.0, cfg);
  if (args.format == "table") {
    print_passes_table(art.passes);
    return 0;
  }
  json out;
  out["satellite"] = tle.catalog_number;
  json passes = json::array();
  for (const auto& p : art.passes) passes.push_back(pass_to_json(p));
  out["passes"] = passes;
  std::fputs(canonical_dump(out, 2).c_str(), stdout);
  return 0;
}

int cmd_presets(const std::string& format) {
  if (format == "table") {
    for (const auto& name : preset_names()) {
      const Workload w = load_preset(name);
      std::printf("%-16s %2zu steps  %s\n", name.c_str(), w.steps.size(),
                  preset_summary(name).c_str());
    }
    return 0;
  }
  json out;
  json list = json::array();
  for (const auto& name : preset_names()) {
    const Workload w = load_preset(name);
    list.push_back({{"name", name},
                    {"steps", static_cast<int>(w.steps.size())},
                    {"summary", preset_summary(name)}});
  }
  out["presets"] = list;
  std::fputs(canonical_dump(out, 2).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic space-ground execution planner"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string workload_name, workload_file;
  std::string bind_address = "0.0.0.0";
  int port = 8080;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--norad", args.norad, "NORAD catalog number");
    cmd->add_option("--tle-file", args.tle_file, "TLE file (2- or 3-line)");
    cmd->add_option("--start", args.start, "Plan start, ISO-8601 or 'now'");
    cmd->add_option("--horizon", args.horizon_hours, "Horizon in hours")
        ->check(CLI::Range(1.0, 168.0));
    cmd->add_option("--config", args.config_file, "JSON config overrides");
    if (with_format)
      cmd->add_option("--format", args.format, "Output format")
          ->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--offline", args.offline, "Never touch the network");
  };

  CLI::App* plan = app.add_subcommand("plan", "Compute an execution plan");
  add_common(plan);
  plan->add_option("--workload", workload_name, "Preset workload name");
  plan->add_option("--workload-file", workload_file, "Custom workload JSON");

  CLI::App* windows = app.add_subcommand("windows", "Orbital window timeline");
  add_common(windows);

  CLI::App* passes = app.add_subcommand("passes", "Ground station passes");
  add_common(passes);

  CLI::App* presets = app.add_subcommand("presets", "List workload presets");
  presets->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP planning service");
  serve->add_option("--bind", bind_address, "Bind address");
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--config", args.config_file, "JSON config overrides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (plan->parsed()) return cmd_plan(args, workload_name, workload_file);
    if (windows->parsed()) return cmd_windows(args);
    if (passes->parsed()) return cmd_passes(args);
    if (presets->parsed()) return cmd_presets(args.format);
    if (serve->parsed()) {
      ServiceConfig cfg;
      cfg.bind_address = bind_address;
      cfg.port = port;
      cfg.provider = provider_from_env();
      cfg.pipeline = load_config(args.config_file);
      if (const char* bind_env = std::getenv("ORBITPLAN_BIND"))
        if (serve->count("--bind") == 0) cfg.bind_address = bind_env;
      if (const char* ttl_env = std::getenv("ORBITPLAN_CACHE_TTL"))
        cfg.cache_ttl_s = std::stod(ttl_env);
      return http_serve(cfg);
    }
  } catch (const orbitplan::Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", errc_name(e.code()), e.what());
    return is_planning_failure(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
