#include "orbitplan/propagator.hpp"

#include <cmath>

#include "orbitplan/errors.hpp"

namespace orbitplan {

namespace {

constexpr double kMinRadiusKm = kEarthRadiusKm + 100.0;  // decay threshold
constexpr double kKeplerTol = 1e-10;
constexpr int kKeplerMaxIter = 50;
constexpr double kMaxEpochOffsetS = 7.0 * 86400.0;

double solve_kepler(double mean_anomaly, double ecc) {
  double e_anom = mean_anomaly;
  for (int i = 0; i < kKeplerMaxIter; ++i) {
    const double f = e_anom - ecc * std::sin(e_anom) - mean_anomaly;
    const double step = f / (1.0 - ecc * std::cos(e_anom));
    e_anom -= step;
    if (std::abs(step) < kKeplerTol) return e_anom;
  }
  fail(Errc::kepler_nonconvergence, "Kepler iteration did not converge");
}

}  // namespace

void PropagationConfig::validate() const {
  if (step_s <= 0.0) fail(Errc::bad_config, "propagation step must be > 0");
  if (horizon_s < step_s)
    fail(Errc::bad_config, "propagation horizon must be >= step");
  if (horizon_s / step_s > 10080.0)
    fail(Errc::bad_config, "propagation horizon exceeds the 7-day sample cap");
}

StateVector KeplerJ2Propagator::at(const Tle& tle, UtcTime t) const {
  const double dt = tle.epoch.seconds_until(t);
  if (std::abs(dt) > kMaxEpochOffsetS)
    fail(Errc::time_out_of_range,
         "propagation time is more than 7 days from the TLE epoch");

  const double incl = tle.inclination_deg * kDegToRad;
  const double ecc = tle.eccentricity;
  const double n = tle.mean_motion_rev_per_day * 2.0 * kPi / 86400.0;  // rad/s
  const double a = std::cbrt(kMuEarth / (n * n));
  const double p = a * (1.0 - ecc * ecc);
  const double cos_i = std::cos(incl);
  const double re_p = kEarthRadiusKm / p;
  const double j2_factor = 1.5 * kJ2 * re_p * re_p * n;

  // J2 secular rates (rad/s); orientation angles only, energy untouched.
  const double raan_dot = -j2_factor * cos_i;
  const double argp_dot = 0.5 * j2_factor * (5.0 * cos_i * cos_i - 1.0);
  const double m_dot =
      0.5 * j2_factor * std::sqrt(1.0 - ecc * ecc) * (3.0 * cos_i * cos_i - 1.0);

  const double raan = tle.raan_deg * kDegToRad + raan_dot * dt;
  const double argp = tle.arg_perigee_deg * kDegToRad + argp_dot * dt;
  const double mean_anom =
      std::fmod(tle.mean_anomaly_deg * kDegToRad + (n + m_dot) * dt, 2.0 * kPi);

  const double e_anom = solve_kepler(mean_anom, ecc);
  const double cos_e = std::cos(e_anom), sin_e = std::sin(e_anom);
  const double r = a * (1.0 - ecc * cos_e);
  if (r < kMinRadiusKm)
    fail(Errc::orbit_decayed, "computed radius below the decay threshold");

  const double beta = std::sqrt(1.0 - ecc * ecc);
  // Perifocal position/velocity of the osculating ellipse.
  const Vec3 r_pf{a * (cos_e - ecc), a * beta * sin_e, 0.0};
  const double v_scale = std::sqrt(kMuEarth * a) / r;
  const Vec3 v_pf{-v_scale * sin_e, v_scale * beta * cos_e, 0.0};

  const double co = std::cos(raan), so = std::sin(raan);
  const double cw = std::cos(argp), sw = std::sin(argp);
  const double ci = std::cos(incl), si = std::sin(incl);
  const auto rotate = [&](const Vec3& v) -> Vec3 {
    return {
        (co * cw - so * sw * ci) * v.x + (-co * sw - so * cw * ci) * v.y,
        (so * cw + co * sw * ci) * v.x + (-so * sw + co * cw * ci) * v.y,
        (sw * si) * v.x + (cw * si) * v.y,
    };
  };

  StateVector out;
  out.t = t;
  out.r_eci = rotate(r_pf);
  out.v_eci = rotate(v_pf);
  out.r_ecf = eci_to_ecf(out.r_eci, t);
  out.geodetic = ecf_to_geodetic(out.r_ecf);
  return out;
}

const Propagator& default_propagator() {
  static const KeplerJ2Propagator instance;
  return instance;
}

StateVector propagate(const Tle& tle, UtcTime t) {
  return default_propagator().at(tle, t);
}

Trajectory propagate_trajectory(const Tle& tle, const PropagationConfig& cfg,
                                const Propagator& prop) {
  cfg.validate();
  const int n_steps = static_cast<int>(std::llround(cfg.horizon_s / cfg.step_s));
  Trajectory traj;
  traj.step_s = cfg.step_s;
  traj.orbital_period_s = tle.orbital_period_s();
  traj.samples.reserve(n_steps + 1);
  for (int i = 0; i <= n_steps; ++i)
    traj.samples.push_back(prop.at(tle, cfg.start.plus_seconds(i * cfg.step_s)));
  return traj;
}

}  // namespace orbitplan
