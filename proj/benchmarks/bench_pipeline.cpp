// Pipeline micro/macro benchmarks over the ISS fixture: propagation,
// environment construction, planning phases, and the full run.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "orbitplan/pipeline.hpp"

namespace {

using namespace orbitplan;

Tle fixture_tle() {
  std::ifstream in(std::string(ORBITPLAN_FIXTURES_DIR) + "/iss.tle");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::istringstream lines(ss.str());
  std::string title, l1, l2;
  std::getline(lines, title);
  std::getline(lines, l1);
  std::getline(lines, l2);
  return parse_tle(l1, l2);
}

const UtcTime kStart = make_utc(2024, 3, 20);

void BM_PropagateTrajectory(benchmark::State& state) {
  const Tle tle = fixture_tle();
  PropagationConfig cfg;
  cfg.start = kStart;
  cfg.horizon_s = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto traj = propagate_trajectory(tle, cfg);
    benchmark::DoNotOptimize(traj);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cfg.horizon_s / cfg.step_s));
}
BENCHMARK(BM_PropagateTrajectory)->Arg(3600)->Arg(43200);

void BM_EnvironmentConstruction(benchmark::State& state) {
  const Tle tle = fixture_tle();
  const PipelineConfig cfg;
  for (auto _ : state) {
    auto env = build_environment(tle, kStart, 43200.0, cfg);
    benchmark::DoNotOptimize(env);
  }
}
BENCHMARK(BM_EnvironmentConstruction);

void BM_PlanningPhases(benchmark::State& state) {
  // Placement + transfer insertion + scheduling + assembly, with the
  // environment precomputed outside the loop.
  const Tle tle = fixture_tle();
  const PipelineConfig cfg;
  const auto env = build_environment(tle, kStart, 43200.0, cfg);
  const Workload workload = load_preset("eo-qa");
  SatelliteInfo sat{tle.catalog_number, "ISS"};
  for (auto _ : state) {
    auto decisions = place(workload, cfg.envelope.thermal_limit_w, cfg.placement);
    auto ins = insert_transfers(workload, decisions, env.passes, cfg.placement);
    auto scheduled = schedule(ins.workload, env.timeline, decisions,
                              workload.deadline_orbits,
                              env.trajectory.orbital_period_s);
    auto timeline = env.timeline;
    auto plan = assemble_plan(sat, kStart, 43200.0, workload.name,
                              std::move(timeline), std::move(decisions),
                              std::move(ins.transfers), std::move(scheduled));
    benchmark::DoNotOptimize(plan);
  }
}
BENCHMARK(BM_PlanningPhases);

void BM_FullPipeline(benchmark::State& state) {
  const Tle tle = fixture_tle();
  const PipelineConfig cfg;
  PlanningInputs in;
  in.tle = tle;
  in.workload = load_preset("ml-inference");
  in.start = kStart;
  for (auto _ : state) {
    auto plan = run_pipeline(in, cfg);
    benchmark::DoNotOptimize(plan);
  }
}
BENCHMARK(BM_FullPipeline);

}  // namespace

BENCHMARK_MAIN();
