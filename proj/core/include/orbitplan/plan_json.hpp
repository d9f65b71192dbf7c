#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbitplan/scheduler.hpp"

namespace orbitplan {

// Canonical serialization: object keys sorted, floating-point numbers
// rendered with fixed 6-decimal formatting so the output (and its hash) is
// byte-stable across platforms and runs.
std::string canonical_dump(const nlohmann::json& j, int indent = -1);

// FNV-1a 64-bit fingerprint, 16 hex chars. Not cryptographic; used as a
// reproducibility check.
std::string fnv1a64_hex(const std::string& bytes);

nlohmann::json window_to_json(const OrbitalWindow& w);
nlohmann::json pass_to_json(const PassPrediction& p);
nlohmann::json decision_to_json(const PlacementDecision& d);
nlohmann::json transfer_to_json(const TransferSpec& t);
nlohmann::json scheduled_step_to_json(const ScheduledStep& s);

// Full plan document (schema version "1"). Includes determinism_hash.
nlohmann::json plan_to_json(const ExecutionPlan& plan);

// Hash of the canonical plan document without its determinism_hash field.
std::string plan_hash(const ExecutionPlan& plan);

// Workload documents (custom workload input and presets listing).
nlohmann::json workload_to_json(const Workload& w);
Workload workload_from_json(const nlohmann::json& j);

const char* location_name(Location loc);
const char* direction_name(Direction d);
const char* window_kind_name(WindowKind k);

}  // namespace orbitplan
