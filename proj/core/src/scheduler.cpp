#include "orbitplan/scheduler.hpp"

#include <algorithm>
#include <map>

#include "orbitplan/errors.hpp"
#include "orbitplan/plan_json.hpp"

namespace orbitplan {

bool feasible(const ProcessingStep& step, const OrbitalWindow& w,
              double used_s) {
  if (step.duration_s > w.duration_s() - used_s) return false;
  if (step.power_w > w.power_w) return false;
  if (step.thermal_w > w.thermal_limit_w) return false;
  if (step.compute > w.compute) return false;
  if (step.needs_comms && !(w.comms_rate_mbps > 0.0)) return false;
  return true;
}

std::vector<ScheduledStep> schedule(const Workload& w,
                                    const std::vector<OrbitalWindow>& timeline,
                                    const std::vector<PlacementDecision>& decisions,
                                    double deadline_orbits,
                                    double orbital_period_s) {
  const std::vector<std::string> order = topo_sort(w);
  if (order.empty()) return {};
  if (timeline.empty())
    fail(Errc::no_feasible_window, "empty orbital window timeline");

  std::map<std::string, Location> located;
  for (const auto& d : decisions) located[d.step_id] = d.location;
  // Transfer steps are not covered by placement decisions; they carry their
  // own fixed location.
  for (const auto& s : w.steps)
    if (!located.count(s.id)) located[s.id] = s.location;

  std::map<std::string, std::vector<std::string>> deps;
  for (const auto& [from, to] : w.edges) deps[to].push_back(from);

  const UtcTime t0 = timeline.front().t_start;
  const UtcTime t_max = t0.plus_seconds(deadline_orbits * orbital_period_s);
  std::vector<double> used(timeline.size(), 0.0);

  std::map<std::string, UtcTime> end_time;
  std::vector<ScheduledStep> out;
  out.reserve(order.size());

  for (const auto& id : order) {
    const ProcessingStep& step = *w.find(id);
    UtcTime earliest = t0;
    bool has_dep = false;
    for (const auto& dep : deps[id]) {
      earliest = std::max(earliest, end_time.at(dep));
      has_dep = true;
    }

    if (located.at(id) == Location::ground) {
      // Unlimited ground capacity: starts as soon as dependencies resolve.
      const UtcTime start = has_dep ? std::max(t0, earliest) : t0;
      ScheduledStep s;
      s.step_id = id;
      s.location = Location::ground;
      s.t_start = start;
      s.t_end = start.plus_seconds(step.duration_s);
      end_time[id] = s.t_end;
      out.push_back(std::move(s));
      continue;
    }

    bool placed = false;
    for (std::size_t i = 0; i < timeline.size(); ++i) {
      const OrbitalWindow& win = timeline[i];
      if (win.t_end < earliest) continue;
      if (win.t_start > t_max)
        fail(Errc::deadline_exceeded,
             "step " + id + " cannot be scheduled before the deadline");
      if (!feasible(step, win, used[i])) continue;
      const UtcTime start =
          std::max(win.t_start.plus_seconds(used[i]), earliest);
      if (start.plus_seconds(step.duration_s) > win.t_end) continue;
      ScheduledStep s;
      s.step_id = id;
      s.window_id = win.id;
      s.location = Location::onboard;
      s.t_start = start;
      s.t_end = start.plus_seconds(step.duration_s);
      end_time[id] = s.t_end;
      used[i] += step.duration_s;
      out.push_back(std::move(s));
      placed = true;
      break;
    }
    if (!placed)
      fail(Errc::no_feasible_window,
           "no feasible window within the horizon for step " + id);
  }
  return out;
}

ExecutionPlan assemble_plan(const SatelliteInfo& satellite, UtcTime start,
                            double horizon_s, const std::string& workload_name,
                            std::vector<OrbitalWindow> timeline,
                            std::vector<PlacementDecision> decisions,
                            std::vector<TransferSpec> transfers,
                            std::vector<ScheduledStep> scheduled) {
  ExecutionPlan plan;
  plan.satellite = satellite;
  plan.generated_at = start;
  plan.horizon_s = horizon_s;
  plan.workload_name = workload_name;
  plan.timeline = std::move(timeline);
  plan.decisions = std::move(decisions);
  plan.transfers = std::move(transfers);
  plan.schedule = std::move(scheduled);

  PlanMetrics& m = plan.metrics;
  m.step_count = static_cast<int>(plan.schedule.size());
  int shortfalls = 0;
  for (const auto& t : plan.transfers) {
    if (t.direction == Direction::downlink) {
      m.payload_downlink_mb += t.raw_mb;
      m.channel_downlink_mb += t.total_mb;
      m.planned_downlink_mb += t.planned_mb();
    } else {
      m.payload_uplink_mb += t.raw_mb;
      m.channel_uplink_mb += t.total_mb;
      m.planned_uplink_mb += t.planned_mb();
    }
    if (t.shortfall_mb > 0.0) ++shortfalls;
  }
  if (!plan.schedule.empty()) {
    UtcTime first = plan.schedule.front().t_start;
    UtcTime last = plan.schedule.front().t_end;
    for (const auto& s : plan.schedule) {
      first = std::min(first, s.t_start);
      last = std::max(last, s.t_end);
    }
    m.makespan_s = first.seconds_until(last);
  }

  // Confidence heuristic: 0.99 for a fully scheduled plan with every transfer
  // allocated including its reserve, degraded 10% per shortfall. An empty
  // plan is vacuously certain.
  if (plan.schedule.empty()) {
    plan.confidence = 1.0;
  } else {
    plan.confidence = 0.99;
    for (int i = 0; i < shortfalls; ++i) plan.confidence *= 0.9;
  }

  plan.determinism_hash = plan_hash(plan);
  return plan;
}

}  // namespace orbitplan
