#include "orbitplan/plan_json.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "orbitplan/errors.hpp"

namespace orbitplan {

namespace {

using nlohmann::json;

void dump_value(const json& j, std::string& out, int indent, int depth) {
  const std::string pad =
      indent >= 0 ? "\n" + std::string(indent * (depth + 1), ' ') : "";
  const std::string close_pad =
      indent >= 0 ? "\n" + std::string(indent * depth, ' ') : "";
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // keys sorted by map
        if (!first) out += ',';
        first = false;
        out += pad;
        out += json(it.key()).dump();
        out += ':';
        if (indent >= 0) out += ' ';
        dump_value(it.value(), out, indent, depth + 1);
      }
      if (!first) out += close_pad;
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        out += pad;
        dump_value(v, out, indent, depth + 1);
      }
      if (!first) out += close_pad;
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) fail(Errc::bad_config, "non-finite number in plan");
      if (v == 0.0) v = 0.0;  // collapse -0.0
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
      break;
  }
}

std::string retry_policy_name(RetryPolicy p) {
  switch (p) {
    case RetryPolicy::none: return "none";
    case RetryPolicy::retry_same_window: return "retry_same_window";
    case RetryPolicy::retry_next_window: return "retry_next_window";
  }
  return "none";
}

std::string encryption_name(Encryption e) {
  switch (e) {
    case Encryption::none: return "none";
    case Encryption::aes128: return "aes128";
    case Encryption::aes256: return "aes256";
  }
  return "none";
}

std::string integrity_name(Integrity i) {
  switch (i) {
    case Integrity::none: return "none";
    case Integrity::crc32: return "crc32";
    case Integrity::sha256: return "sha256";
  }
  return "none";
}

template <typename T>
T enum_from(const std::string& s, std::initializer_list<std::pair<const char*, T>> table,
            const char* what) {
  for (const auto& [name, value] : table)
    if (s == name) return value;
  fail(Errc::bad_request, std::string("unknown ") + what + ": " + s);
}

}  // namespace

std::string canonical_dump(const json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  if (indent >= 0) out += '\n';
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* location_name(Location loc) {
  switch (loc) {
    case Location::onboard: return "onboard";
    case Location::ground: return "ground";
    case Location::either: return "either";
  }
  return "either";
}

const char* direction_name(Direction d) {
  return d == Direction::downlink ? "downlink" : "uplink";
}

const char* window_kind_name(WindowKind k) {
  switch (k) {
    case WindowKind::orbit_sunlit: return "orbit_sunlit";
    case WindowKind::orbit_eclipse: return "orbit_eclipse";
    case WindowKind::pass: return "pass";
  }
  return "orbit_sunlit";
}

json window_to_json(const OrbitalWindow& w) {
  json j;
  j["id"] = w.id;
  j["t_start"] = to_iso8601(w.t_start);
  j["t_end"] = to_iso8601(w.t_end);
  j["duration_s"] = w.duration_s();
  j["power_w"] = w.power_w;
  j["thermal_limit_w"] = w.thermal_limit_w;
  j["compute"] = w.compute;
  j["comms_rate_mbps"] = w.comms_rate_mbps;
  j["station"] = w.station ? json(*w.station) : json(nullptr);
  j["kind"] = window_kind_name(w.kind);
  j["pass_ref"] = w.pass_ref ? json(*w.pass_ref) : json(nullptr);
  return j;
}

json pass_to_json(const PassPrediction& p) {
  json j;
  j["id"] = p.id;
  j["station"] = p.station_id;
  j["aos"] = to_iso8601(p.aos);
  j["los"] = to_iso8601(p.los);
  j["duration_s"] = p.duration_s();
  j["peak_elevation_deg"] = p.peak_elevation_deg;
  j["mean_data_rate_mbps"] = p.mean_data_rate_mbps;
  j["worst_margin_db"] = p.worst_margin_db;
  j["ber"] = p.ber;
  j["capacity_mb"] = p.capacity_mb;
  j["sample_count"] = static_cast<int>(p.samples.size());
  return j;
}

json decision_to_json(const PlacementDecision& d) {
  json j;
  j["step"] = d.step_id;
  j["location"] = location_name(d.location);
  switch (d.reason) {
    case PlacementReason::fixed: j["reason"] = "fixed"; break;
    case PlacementReason::reduction_heuristic:
      j["reason"] = "reduction_heuristic";
      break;
    case PlacementReason::cost_compare: j["reason"] = "cost_compare"; break;
  }
  j["cost_onboard"] = d.cost_onboard ? json(*d.cost_onboard) : json(nullptr);
  j["cost_ground"] = d.cost_ground ? json(*d.cost_ground) : json(nullptr);
  return j;
}

json transfer_to_json(const TransferSpec& t) {
  json j;
  j["id"] = t.id;
  j["direction"] = direction_name(t.direction);
  j["producer"] = t.producer_id;
  j["consumer"] = t.consumer_id.empty() ? json(nullptr) : json(t.consumer_id);
  j["raw_mb"] = t.raw_mb;
  j["fec_rate"] = t.fec_rate;
  j["parity_mb"] = t.parity_mb;
  j["encryption_overhead"] = t.overheads.encryption;
  j["integrity_overhead"] = t.overheads.integrity;
  j["framing_overhead"] = t.overheads.framing;
  j["total_mb"] = t.total_mb;
  j["reserve_fraction"] = t.reserve_fraction;
  j["planned_mb"] = t.planned_mb();
  j["channel_ready"] = t.channel_ready;
  j["duration_s"] = t.step.duration_s;
  j["retry_policy"] = retry_policy_name(t.step.retry_policy);
  j["max_retries"] = t.step.max_retries;
  json allocs = json::array();
  for (const auto& a : t.allocations)
    allocs.push_back({{"pass", a.pass_id}, {"mb", a.amount_mb}});
  j["allocations"] = allocs;
  j["shortfall_mb"] = t.shortfall_mb;
  return j;
}

json scheduled_step_to_json(const ScheduledStep& s) {
  json j;
  j["step"] = s.step_id;
  j["window"] = s.window_id ? json(*s.window_id) : json(nullptr);
  j["t_start"] = to_iso8601(s.t_start);
  j["t_end"] = to_iso8601(s.t_end);
  j["location"] = location_name(s.location);
  return j;
}

namespace {

json plan_body(const ExecutionPlan& plan) {
  json j;
  j["schema_version"] = "1";
  j["satellite"] = {{"catalog_number", plan.satellite.catalog_number},
                    {"name", plan.satellite.name}};
  j["generated_at"] = to_iso8601(plan.generated_at);
  j["horizon_s"] = plan.horizon_s;
  j["workload"] = plan.workload_name;
  json timeline = json::array();
  for (const auto& w : plan.timeline) timeline.push_back(window_to_json(w));
  j["timeline"] = timeline;
  json decisions = json::array();
  for (const auto& d : plan.decisions) decisions.push_back(decision_to_json(d));
  j["decisions"] = decisions;
  json transfers = json::array();
  for (const auto& t : plan.transfers) transfers.push_back(transfer_to_json(t));
  j["transfers"] = transfers;
  json schedule = json::array();
  for (const auto& s : plan.schedule)
    schedule.push_back(scheduled_step_to_json(s));
  j["schedule"] = schedule;
  j["metrics"] = {
      {"payload_downlink_mb", plan.metrics.payload_downlink_mb},
      {"payload_uplink_mb", plan.metrics.payload_uplink_mb},
      {"channel_downlink_mb", plan.metrics.channel_downlink_mb},
      {"channel_uplink_mb", plan.metrics.channel_uplink_mb},
      {"planned_downlink_mb", plan.metrics.planned_downlink_mb},
      {"planned_uplink_mb", plan.metrics.planned_uplink_mb},
      {"step_count", plan.metrics.step_count},
      {"makespan_s", plan.metrics.makespan_s},
  };
  j["confidence"] = plan.confidence;
  return j;
}

}  // namespace

std::string plan_hash(const ExecutionPlan& plan) {
  return fnv1a64_hex(canonical_dump(plan_body(plan)));
}

json plan_to_json(const ExecutionPlan& plan) {
  json j = plan_body(plan);
  j["determinism_hash"] = plan.determinism_hash;
  return j;
}

json workload_to_json(const Workload& w) {
  json j;
  j["name"] = w.name;
  j["deadline_orbits"] = w.deadline_orbits;
  json steps = json::array();
  for (const auto& s : w.steps) {
    json sj;
    sj["id"] = s.id;
    sj["power_w"] = s.power_w;
    sj["compute"] = s.compute;
    sj["thermal_w"] = s.thermal_w;
    sj["memory_mb"] = s.memory_mb;
    sj["storage_mb"] = s.storage_mb;
    sj["duration_s"] = s.duration_s;
    sj["data_in_mb"] = s.data_in_mb;
    sj["data_out_mb"] = s.data_out_mb;
    sj["location"] = location_name(s.location);
    sj["needs_comms"] = s.needs_comms;
    sj["retry_policy"] = retry_policy_name(s.retry_policy);
    sj["max_retries"] = s.max_retries;
    sj["checkpoint_interval_s"] =
        s.checkpoint_interval_s ? json(*s.checkpoint_interval_s) : json(nullptr);
    sj["encryption"] = encryption_name(s.encryption);
    sj["integrity"] = integrity_name(s.integrity);
    sj["channel_ready"] = s.channel_ready;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  json edges = json::array();
  for (const auto& [from, to] : w.edges) edges.push_back({from, to});
  j["edges"] = edges;
  j["deliveries"] = w.deliveries;
  return j;
}

Workload workload_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::bad_request, "workload document must be an object");
  Workload w;
  w.name = j.value("name", "custom");
  w.deadline_orbits = j.value("deadline_orbits", 8.0);
  if (w.deadline_orbits <= 0)
    fail(Errc::bad_request, "deadline_orbits must be positive");
  if (!j.contains("steps") || !j["steps"].is_array())
    fail(Errc::bad_request, "workload document requires a steps array");
  for (const auto& sj : j["steps"]) {
    ProcessingStep s;
    if (!sj.contains("id")) fail(Errc::bad_request, "step without id");
    s.id = sj["id"].get<std::string>();
    s.power_w = sj.value("power_w", 0.0);
    s.compute = sj.value("compute", 0.0);
    s.thermal_w = sj.value("thermal_w", 0.0);
    s.memory_mb = sj.value("memory_mb", 0.0);
    s.storage_mb = sj.value("storage_mb", 0.0);
    s.duration_s = sj.value("duration_s", 0.0);
    s.data_in_mb = sj.value("data_in_mb", 0.0);
    s.data_out_mb = sj.value("data_out_mb", 0.0);
    s.location = enum_from<Location>(
        sj.value("location", "either"),
        {{"onboard", Location::onboard},
         {"ground", Location::ground},
         {"either", Location::either}},
        "location");
    s.needs_comms = sj.value("needs_comms", false);
    s.retry_policy = enum_from<RetryPolicy>(
        sj.value("retry_policy", "none"),
        {{"none", RetryPolicy::none},
         {"retry_same_window", RetryPolicy::retry_same_window},
         {"retry_next_window", RetryPolicy::retry_next_window}},
        "retry_policy");
    s.max_retries = sj.value("max_retries", 0);
    if (sj.contains("checkpoint_interval_s") &&
        !sj["checkpoint_interval_s"].is_null())
      s.checkpoint_interval_s = sj["checkpoint_interval_s"].get<double>();
    s.encryption = enum_from<Encryption>(
        sj.value("encryption", "none"),
        {{"none", Encryption::none},
         {"aes128", Encryption::aes128},
         {"aes256", Encryption::aes256}},
        "encryption");
    s.integrity = enum_from<Integrity>(
        sj.value("integrity", "none"),
        {{"none", Integrity::none},
         {"crc32", Integrity::crc32},
         {"sha256", Integrity::sha256}},
        "integrity");
    s.channel_ready = sj.value("channel_ready", false);
    w.steps.push_back(std::move(s));
  }
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        fail(Errc::bad_request, "each edge must be a [from, to] pair");
      w.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  if (j.contains("deliveries"))
    for (const auto& d : j["deliveries"])
      w.deliveries.push_back(d.get<std::string>());
  validate(w);
  return w;
}

}  // namespace orbitplan
