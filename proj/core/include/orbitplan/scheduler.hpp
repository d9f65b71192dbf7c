#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitplan/timeline.hpp"
#include "orbitplan/transfer.hpp"

namespace orbitplan {

struct ScheduledStep {
  std::string step_id;
  std::optional<int> window_id;  // none for ground steps
  UtcTime t_start;
  UtcTime t_end;
  Location location = Location::onboard;
};

struct PlanMetrics {
  double payload_downlink_mb = 0;  // sum of raw volumes crossing down
  double payload_uplink_mb = 0;
  double channel_downlink_mb = 0;  // after FEC + security expansion
  double channel_uplink_mb = 0;
  double planned_downlink_mb = 0;  // channel volume + retransmission reserve
  double planned_uplink_mb = 0;
  int step_count = 0;
  double makespan_s = 0;
};

struct SatelliteInfo {
  int catalog_number = 0;
  std::string name;
};

struct ExecutionPlan {
  SatelliteInfo satellite;
  UtcTime generated_at;  // the resolved planning start, for reproducibility
  double horizon_s = 0;
  std::string workload_name;
  std::vector<OrbitalWindow> timeline;
  std::vector<PlacementDecision> decisions;
  std::vector<TransferSpec> transfers;
  std::vector<ScheduledStep> schedule;
  PlanMetrics metrics;
  double confidence = 0;
  std::string determinism_hash;
};

// Joint resource feasibility of one step in one window given seconds already
// allocated there.
bool feasible(const ProcessingStep& step, const OrbitalWindow& w, double used_s);

// Greedy first-fit assignment in topological order. Ground steps consume no
// window capacity; on-board and transfer steps take the first feasible window
// compatible with their dependency earliest-start. Fails once a candidate
// window begins after the deadline.
std::vector<ScheduledStep> schedule(const Workload& w,
                                    const std::vector<OrbitalWindow>& timeline,
                                    const std::vector<PlacementDecision>& decisions,
                                    double deadline_orbits,
                                    double orbital_period_s);

ExecutionPlan assemble_plan(const SatelliteInfo& satellite, UtcTime start,
                            double horizon_s, const std::string& workload_name,
                            std::vector<OrbitalWindow> timeline,
                            std::vector<PlacementDecision> decisions,
                            std::vector<TransferSpec> transfers,
                            std::vector<ScheduledStep> scheduled);

}  // namespace orbitplan
