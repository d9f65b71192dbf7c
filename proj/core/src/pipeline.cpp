#include "orbitplan/pipeline.hpp"

#include <chrono>

#include "orbitplan/errors.hpp"

namespace orbitplan {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

PipelineArtifacts build_environment(const Tle& tle, UtcTime start,
                                    double horizon_s,
                                    const PipelineConfig& cfg) {
  PropagationConfig prop;
  prop.start = start;
  prop.horizon_s = horizon_s;
  prop.step_s = cfg.step_s;

  PipelineArtifacts art;
  art.trajectory = propagate_trajectory(tle, prop);
  art.illumination = eclipse_windows(art.trajectory);
  art.passes = predict_passes(art.trajectory, cfg.stations, cfg.link);
  art.timeline = build_timeline(art.illumination, art.passes, cfg.envelope);
  return art;
}

ExecutionPlan run_pipeline(const PlanningInputs& in, const PipelineConfig& cfg,
                           PhaseTimings* timings) {
  validate(in.workload);

  const auto t_env = std::chrono::steady_clock::now();
  PipelineArtifacts env = build_environment(in.tle, in.start, in.horizon_s, cfg);
  if (timings) timings->environment_ms = ms_since(t_env);

  const auto t_plan = std::chrono::steady_clock::now();
  auto decisions = place(in.workload, cfg.envelope.thermal_limit_w, cfg.placement);
  auto insertion = insert_transfers(in.workload, decisions, env.passes, cfg.placement);
  auto scheduled =
      schedule(insertion.workload, env.timeline, decisions,
               in.workload.deadline_orbits, env.trajectory.orbital_period_s);

  SatelliteInfo sat;
  sat.catalog_number = in.tle.catalog_number;
  sat.name = in.satellite_name.empty()
                 ? "NORAD " + std::to_string(in.tle.catalog_number)
                 : in.satellite_name;
  ExecutionPlan plan = assemble_plan(
      sat, in.start, in.horizon_s, in.workload.name, std::move(env.timeline),
      std::move(decisions), std::move(insertion.transfers), std::move(scheduled));
  if (timings) timings->planning_ms = ms_since(t_plan);
  return plan;
}

}  // namespace orbitplan
