#pragma once

#include <vector>

#include "orbitplan/propagator.hpp"

namespace orbitplan {

// Low-precision solar state from the truncated ephemeris series.
struct SunState {
  UtcTime t;
  Vec3 r_sun_eci;                // km
  double ecliptic_longitude_deg = 0;
  double obliquity_deg = 0;
  double distance_au = 0;
};

enum class IlluminationKind { eclipse, sunlit };

struct IlluminationWindow {
  UtcTime start;
  UtcTime end;
  IlluminationKind kind = IlluminationKind::sunlit;

  double duration_s() const { return start.seconds_until(end); }
};

SunState sun_position(UtcTime t);

// Cylindrical shadow test: in eclipse iff the satellite sits on the anti-sun
// side and within one equatorial Earth radius of the Earth-Sun axis.
bool is_eclipsed(const Vec3& r_sat, const Vec3& r_sun);

// Merge per-sample illumination states into alternating windows that tile
// [traj.start, traj.end] exactly. Boundaries snap to sample timestamps.
std::vector<IlluminationWindow> eclipse_windows(const Trajectory& traj);

}  // namespace orbitplan
