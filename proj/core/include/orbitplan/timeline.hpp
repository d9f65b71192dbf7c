#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitplan/groundlink.hpp"
#include "orbitplan/skymodel.hpp"

namespace orbitplan {

enum class WindowKind { orbit_sunlit, orbit_eclipse, pass };

// A contiguous interval with a stable resource envelope: available power,
// thermal dissipation limit, normalized compute capacity, comms rate, and
// the station in view (pass windows only).
struct OrbitalWindow {
  int id = -1;
  UtcTime t_start;
  UtcTime t_end;
  double power_w = 0;
  double thermal_limit_w = 0;
  double compute = 0;
  double comms_rate_mbps = 0;
  std::optional<std::string> station;
  WindowKind kind = WindowKind::orbit_sunlit;
  std::optional<int> pass_ref;

  double duration_s() const { return t_start.seconds_until(t_end); }
};

struct EnvelopeConfig {
  double sunlit_power_w = 80.0;
  double eclipse_power_w = 25.0;
  double sunlit_compute = 1.0;
  double eclipse_compute = 0.6;
  double thermal_limit_w = 40.0;
  double min_orbit_window_s = 30.0;
  double min_pass_window_s = 10.0;

  void validate() const;
};

// Merge illumination windows and station passes into a sorted, disjoint
// window timeline. Pass sub-windows inherit power/compute from the enclosing
// illumination state; a pass straddling an illumination boundary is split
// there. Overlapping passes resolve by earliest AOS, the later pass truncated
// to the non-overlapping remainder. Sub-minimum pass slivers revert to orbit
// time; sub-minimum orbit slivers between passes are dropped.
std::vector<OrbitalWindow> build_timeline(
    const std::vector<IlluminationWindow>& illum,
    const std::vector<PassPrediction>& passes, const EnvelopeConfig& cfg);

}  // namespace orbitplan
