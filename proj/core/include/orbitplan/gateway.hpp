#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "orbitplan/pipeline.hpp"

namespace orbitplan {

// TLE provider endpoint. The URL template substitutes {norad}; the default
// targets the CelesTrak GP query format and can be overridden via the
// ORBITPLAN_TLE_URL environment variable or configuration.
struct TleProviderConfig {
  std::string url_template =
      "https://celestrak.org/NORAD/elements/gp.php?CATNR={norad}&FORMAT=TLE";
  int timeout_ms = 5000;
  int retries = 2;
  int backoff_ms = 1000;
};

TleProviderConfig provider_from_env();

struct TleRecord {
  std::string name;  // title line if present
  std::string line1;
  std::string line2;
};

// HTTP GET against the provider with fixed-backoff retries. Accepts 3-line
// (title + elements) or bare 2-line responses.
TleRecord fetch_tle(int norad, const TleProviderConfig& cfg);

// Parse a TLE file or response body in 2- or 3-line format.
TleRecord parse_tle_text(const std::string& text);

struct PlanRequest {
  int norad = 0;
  std::string workload_name;            // preset name, or
  std::optional<Workload> workload;     // inline custom workload
  double horizon_hours = 12.0;
  std::optional<UtcTime> start;         // defaults to "now"
  std::optional<TleRecord> tle;         // inline/file source; remote otherwise
  PipelineConfig config;

  void validate_request() const;
};

// Plan cache with per-entry TTL. Keys cover the satellite, workload identity,
// start time quantized to the minute, and the full pipeline configuration.
class PlanCache {
 public:
  explicit PlanCache(double ttl_s = 3600.0) : ttl_s_(ttl_s) {}

  std::optional<ExecutionPlan> get(const std::string& key, UtcTime now);
  void put(const std::string& key, ExecutionPlan plan, UtcTime now);
  std::size_t size() const;

 private:
  struct Entry {
    ExecutionPlan plan;
    UtcTime expires_at;
  };
  double ttl_s_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Entry> entries_;
};

std::string cache_key(const PlanRequest& req, UtcTime start);

// Resolve the request (preset lookup, TLE source, start time), run the
// pipeline through the cache, and return the plan.
ExecutionPlan plan_request(const PlanRequest& req, PlanCache& cache,
                           const TleProviderConfig& provider,
                           PhaseTimings* timings = nullptr);

}  // namespace orbitplan
