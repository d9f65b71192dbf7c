#pragma once

#include <optional>

#include "orbitplan/scheduler.hpp"

namespace orbitplan {

struct PipelineConfig {
  double step_s = 30.0;
  EnvelopeConfig envelope;
  PlacementConfig placement;
  LinkParams link;
  std::vector<GroundStation> stations = default_stations();
};

struct PlanningInputs {
  Tle tle;
  std::string satellite_name;  // optional; from the TLE title line
  Workload workload;
  UtcTime start;
  double horizon_s = 43200.0;
};

struct PhaseTimings {
  double environment_ms = 0;  // propagation + eclipse + passes + timeline
  double planning_ms = 0;     // placement + transfer + schedule + assembly
};

struct PipelineArtifacts {
  Trajectory trajectory;
  std::vector<IlluminationWindow> illumination;
  std::vector<PassPrediction> passes;
  std::vector<OrbitalWindow> timeline;
};

// Environment construction alone (CLI `windows` / `passes` subcommands).
PipelineArtifacts build_environment(const Tle& tle, UtcTime start,
                                    double horizon_s,
                                    const PipelineConfig& cfg);

// The full planning pipeline: environment, placement, transfer insertion,
// scheduling, plan assembly.
ExecutionPlan run_pipeline(const PlanningInputs& in, const PipelineConfig& cfg,
                           PhaseTimings* timings = nullptr);

}  // namespace orbitplan
