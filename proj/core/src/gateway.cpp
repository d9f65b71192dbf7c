#include "orbitplan/gateway.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "orbitplan/errors.hpp"
#include "orbitplan/plan_json.hpp"

namespace orbitplan {

namespace {

std::string substitute(const std::string& tmpl, const std::string& token,
                       const std::string& value) {
  std::string out = tmpl;
  const auto pos = out.find(token);
  if (pos != std::string::npos) out.replace(pos, token.size(), value);
  return out;
}

// Split "scheme://host[:port]/path?query" into origin and request target.
void split_url(const std::string& url, std::string& origin,
               std::string& target) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    fail(Errc::bad_config, "provider URL must include a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    origin = url;
    target = "/";
  } else {
    origin = url.substr(0, path_start);
    target = url.substr(path_start);
  }
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

TleProviderConfig provider_from_env() {
  TleProviderConfig cfg;
  if (const char* url = std::getenv("ORBITPLAN_TLE_URL")) cfg.url_template = url;
  return cfg;
}

TleRecord parse_tle_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  TleRecord rec;
  if (lines.size() >= 3 && lines[1].rfind("1 ", 0) == 0 &&
      lines[2].rfind("2 ", 0) == 0) {
    rec.name = lines[0];
    rec.line1 = lines[1];
    rec.line2 = lines[2];
  } else if (lines.size() >= 2 && lines[0].rfind("1 ", 0) == 0 &&
             lines[1].rfind("2 ", 0) == 0) {
    rec.line1 = lines[0];
    rec.line2 = lines[1];
  } else {
    fail(Errc::tle_malformed_response,
         "expected a 2- or 3-line element set, got " +
             std::to_string(lines.size()) + " usable lines");
  }
  return rec;
}

TleRecord fetch_tle(int norad, const TleProviderConfig& cfg) {
  const std::string url =
      substitute(cfg.url_template, "{norad}", std::to_string(norad));
  std::string origin, target;
  split_url(url, origin, target);

  std::string last_error = "no attempts made";
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    if (attempt > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(cfg.backoff_ms));
    httplib::Client client(origin);
    client.set_connection_timeout(0, cfg.timeout_ms * 1000);
    client.set_read_timeout(0, cfg.timeout_ms * 1000);
    auto res = client.Get(target);
    if (!res) {
      last_error = "connection failure (" + httplib::to_string(res.error()) + ")";
      continue;
    }
    if (res->status == 404) fail(Errc::tle_not_found, "satellite not found");
    if (res->status != 200) {
      last_error = "provider returned HTTP " + std::to_string(res->status);
      continue;
    }
    const std::string body = trim(res->body);
    // CelesTrak answers queries for unknown objects with this plain string.
    if (body.empty() || body.rfind("No GP data found", 0) == 0)
      fail(Errc::tle_not_found,
           "no element set for catalog number " + std::to_string(norad));
    return parse_tle_text(body);
  }
  fail(Errc::tle_network, "TLE fetch failed after " +
                              std::to_string(cfg.retries + 1) +
                              " attempts: " + last_error);
}

void PlanRequest::validate_request() const {
  if (horizon_hours < 1.0 || horizon_hours > 168.0)
    fail(Errc::bad_request, "horizon_hours must lie in [1, 168]");
  if (workload_name.empty() && !workload)
    fail(Errc::bad_request, "request needs a workload preset name or document");
  if (!workload_name.empty() && workload)
    fail(Errc::bad_request, "give either a preset name or an inline workload");
}

std::optional<ExecutionPlan> PlanCache::get(const std::string& key,
                                            UtcTime now) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  if (now >= it->second.expires_at) {
    entries_.erase(it);
    return std::nullopt;
  }
  return it->second.plan;
}

void PlanCache::put(const std::string& key, ExecutionPlan plan, UtcTime now) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_[key] = Entry{std::move(plan), now.plus_seconds(ttl_s_)};
}

std::size_t PlanCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

std::string cache_key(const PlanRequest& req, UtcTime start) {
  // Start time quantized to the minute so "now" requests coalesce.
  const std::int64_t minute = start.unix_ms() / 60000;

  nlohmann::json key;
  key["norad"] = req.norad;
  key["workload"] = req.workload ? workload_to_json(*req.workload)
                                 : nlohmann::json(req.workload_name);
  key["start_minute"] = minute;
  key["horizon_hours"] = req.horizon_hours;
  const PipelineConfig& c = req.config;
  key["config"] = {
      {"step_s", c.step_s},
      {"envelope",
       {{"sunlit_power_w", c.envelope.sunlit_power_w},
        {"eclipse_power_w", c.envelope.eclipse_power_w},
        {"sunlit_compute", c.envelope.sunlit_compute},
        {"eclipse_compute", c.envelope.eclipse_compute},
        {"thermal_limit_w", c.envelope.thermal_limit_w},
        {"min_orbit_window_s", c.envelope.min_orbit_window_s},
        {"min_pass_window_s", c.envelope.min_pass_window_s}}},
      {"placement",
       {{"reduction_threshold", c.placement.reduction_threshold},
        {"energy_weight", c.placement.energy_weight},
        {"thermal_penalty_scale", c.placement.thermal_penalty_scale},
        {"time_occupancy_weight", c.placement.time_occupancy_weight},
        {"transfer_time_weight", c.placement.transfer_time_weight},
        {"transfer_volume_weight", c.placement.transfer_volume_weight},
        {"assumed_mean_rate_mbps", c.placement.assumed_mean_rate_mbps},
        {"default_fec_rate", c.placement.default_fec_rate}}},
      {"link",
       {{"frequency_ghz", c.link.frequency_ghz},
        {"tx_power_dbw", c.link.tx_power_dbw},
        {"tx_gain_dbi", c.link.tx_gain_dbi},
        {"rx_gain_dbi", c.link.rx_gain_dbi},
        {"impl_loss_db", c.link.impl_loss_db},
        {"atm_loss_db", c.link.atm_loss_db},
        {"rain_margin_db", c.link.rain_margin_db},
        {"margin_reference_offset_db", c.link.margin_reference_offset_db}}},
  };
  nlohmann::json stations = nlohmann::json::array();
  for (const auto& s : req.config.stations)
    stations.push_back({{"id", s.id},
                        {"lat", s.lat_deg},
                        {"lon", s.lon_deg},
                        {"alt", s.alt_km},
                        {"min_elevation", s.min_elevation_deg}});
  key["stations"] = stations;
  return fnv1a64_hex(canonical_dump(key));
}

ExecutionPlan plan_request(const PlanRequest& req, PlanCache& cache,
                           const TleProviderConfig& provider,
                           PhaseTimings* timings) {
  req.validate_request();

  const UtcTime now = UtcTime::from_unix_ms(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  const UtcTime start = req.start.value_or(now);

  const std::string key = cache_key(req, start);
  if (auto hit = cache.get(key, now)) return *hit;

  PlanningInputs in;
  in.workload =
      req.workload ? *req.workload : load_preset(req.workload_name);
  const TleRecord rec = req.tle ? *req.tle : fetch_tle(req.norad, provider);
  in.tle = parse_tle(rec.line1, rec.line2);
  in.satellite_name = rec.name;
  in.start = start;
  in.horizon_s = req.horizon_hours * 3600.0;

  ExecutionPlan plan = run_pipeline(in, req.config, timings);
  cache.put(key, plan, now);
  return plan;
}

}  // namespace orbitplan
