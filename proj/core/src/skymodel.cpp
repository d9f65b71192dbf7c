#include "orbitplan/skymodel.hpp"

#include <cmath>

#include "orbitplan/errors.hpp"

namespace orbitplan {

SunState sun_position(UtcTime t) {
  const double tc = julian_centuries_j2000(t);

  const double mean_anom = wrap_degrees(357.5291 + 35999.0503 * tc);
  const double mean_lon = wrap_degrees(280.4664 + 36000.7698 * tc);
  const double ecl_lon =
      wrap_degrees(mean_lon + 1.9146 * std::sin(mean_anom * kDegToRad) +
                   0.02 * std::sin(2.0 * mean_anom * kDegToRad));
  const double obliquity = 23.4393 - 0.0130 * tc;
  const double dist_au = 1.00014 -
                         0.01671 * std::cos(mean_anom * kDegToRad) -
                         0.00014 * std::cos(2.0 * mean_anom * kDegToRad);

  const double lam = ecl_lon * kDegToRad;
  const double eps = obliquity * kDegToRad;
  const double r_km = dist_au * kAuKm;

  SunState s;
  s.t = t;
  s.ecliptic_longitude_deg = ecl_lon;
  s.obliquity_deg = obliquity;
  s.distance_au = dist_au;
  s.r_sun_eci = {r_km * std::cos(lam), r_km * std::sin(lam) * std::cos(eps),
                 r_km * std::sin(lam) * std::sin(eps)};
  return s;
}

bool is_eclipsed(const Vec3& r_sat, const Vec3& r_sun) {
  const Vec3 s_hat = r_sun.normalized();
  const double d = r_sat.dot(s_hat);
  if (d >= 0.0) return false;
  return (r_sat - s_hat * d).norm() < kEarthRadiusKm;
}

std::vector<IlluminationWindow> eclipse_windows(const Trajectory& traj) {
  const auto& samples = traj.samples;
  if (samples.empty())
    fail(Errc::bad_config, "eclipse detection requires a non-empty trajectory");

  std::vector<IlluminationWindow> windows;
  if (samples.size() == 1) {
    const bool ecl = is_eclipsed(samples[0].r_eci,
                                 sun_position(samples[0].t).r_sun_eci);
    windows.push_back({samples[0].t, samples[0].t,
                       ecl ? IlluminationKind::eclipse
                           : IlluminationKind::sunlit});
    return windows;
  }

  // Each inter-sample interval [t_i, t_{i+1}) carries the state at t_i; the
  // final sample only closes the horizon.
  auto state_at = [&](std::size_t i) {
    return is_eclipsed(samples[i].r_eci, sun_position(samples[i].t).r_sun_eci)
               ? IlluminationKind::eclipse
               : IlluminationKind::sunlit;
  };

  IlluminationKind run_kind = state_at(0);
  UtcTime run_start = samples[0].t;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const IlluminationKind k = state_at(i);
    if (k != run_kind) {
      windows.push_back({run_start, samples[i].t, run_kind});
      run_kind = k;
      run_start = samples[i].t;
    }
  }
  windows.push_back({run_start, samples.back().t, run_kind});
  return windows;
}

}  // namespace orbitplan
