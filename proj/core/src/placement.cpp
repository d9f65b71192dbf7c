#include "orbitplan/placement.hpp"

#include "orbitplan/errors.hpp"

namespace orbitplan {

double cost_onboard(const ProcessingStep& step, double thermal_limit_w,
                    const PlacementConfig& cfg) {
  if (thermal_limit_w <= 0)
    fail(Errc::bad_config, "thermal limit must be positive");
  return cfg.energy_weight * step.power_w * step.duration_s +
         step.thermal_w / thermal_limit_w * cfg.thermal_penalty_scale +
         step.duration_s * cfg.time_occupancy_weight;
}

double cost_ground(const ProcessingStep& step, const PlacementConfig& cfg) {
  const double expansion =
      (1.0 + cfg.enc_overhead(step.encryption)) / cfg.default_fec_rate;
  const double down_mb = step.data_in_mb * expansion;
  const double up_mb = step.data_out_mb * expansion;
  const double total_mb = down_mb + up_mb;
  const double rate_mb_s = cfg.assumed_mean_rate_mbps / 8.0;
  return total_mb / rate_mb_s * cfg.transfer_time_weight +
         total_mb * cfg.transfer_volume_weight;
}

std::vector<PlacementDecision> place(const Workload& w, double thermal_limit_w,
                                     const PlacementConfig& cfg) {
  std::vector<PlacementDecision> decisions;
  decisions.reserve(w.steps.size());
  for (const auto& step : w.steps) {
    PlacementDecision d;
    d.step_id = step.id;
    if (step.location != Location::either) {
      d.location = step.location;
      d.reason = PlacementReason::fixed;
    } else if (step.data_in_mb > 0.0 &&
               step.data_out_mb / step.data_in_mb < cfg.reduction_threshold) {
      // Strong data reduction keeps the step up regardless of other costs.
      d.location = Location::onboard;
      d.reason = PlacementReason::reduction_heuristic;
    } else {
      const double up = cost_onboard(step, thermal_limit_w, cfg);
      const double down = cost_ground(step, cfg);
      d.location = up <= down ? Location::onboard : Location::ground;
      d.reason = PlacementReason::cost_compare;
      d.cost_onboard = up;
      d.cost_ground = down;
    }
    decisions.push_back(std::move(d));
  }
  return decisions;
}

}  // namespace orbitplan
