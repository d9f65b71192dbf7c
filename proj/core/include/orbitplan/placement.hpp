#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitplan/workload.hpp"

namespace orbitplan {

struct PlacementConfig {
  double reduction_threshold = 0.1;
  // Cost-model weights. energy_weight is the (implicit) weight of the
  // power*duration term; carrying it explicitly keeps the on-board/ground
  // comparison invariant under common scaling of all weights.
  double energy_weight = 1.0;
  double thermal_penalty_scale = 500.0;
  double time_occupancy_weight = 0.5;   // per second
  double transfer_time_weight = 10.0;
  double transfer_volume_weight = 2.0;  // per MB
  double assumed_mean_rate_mbps = 80.0;
  double default_fec_rate = 0.75;

  double enc_overhead(Encryption scheme) const {
    switch (scheme) {
      case Encryption::aes256: return 0.05;
      case Encryption::aes128: return 0.03;
      case Encryption::none: return 0.0;
    }
    return 0.0;
  }
};

enum class PlacementReason { fixed, reduction_heuristic, cost_compare };

struct PlacementDecision {
  std::string step_id;
  Location location = Location::onboard;  // onboard or ground, never either
  PlacementReason reason = PlacementReason::fixed;
  std::optional<double> cost_onboard;
  std::optional<double> cost_ground;
};

// On-board execution cost: energy + thermal utilization penalty + window
// time occupancy.
double cost_onboard(const ProcessingStep& step, double thermal_limit_w,
                    const PlacementConfig& cfg);

// Ground execution cost: transfer time and volume for moving the step's
// input down and output up, with FEC and encryption expansion.
double cost_ground(const ProcessingStep& step, const PlacementConfig& cfg);

// Fixed locations pass through; `either` steps resolve by the >10:1 data
// reduction heuristic first, then by cost comparison (ties go on-board).
std::vector<PlacementDecision> place(const Workload& w, double thermal_limit_w,
                                     const PlacementConfig& cfg);

}  // namespace orbitplan
