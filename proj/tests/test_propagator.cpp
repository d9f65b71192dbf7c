#include <doctest.h>

#include <cmath>
#include <string>

#include "orbitplan/errors.hpp"
#include "orbitplan/propagator.hpp"
#include "support.hpp"

using namespace orbitplan;

namespace {

// Synthetic circular equatorial TLE: e = 0, i = 0, n = 16 rev/day.
Tle circular_equatorial() {
  Tle tle;
  tle.catalog_number = 90000;
  tle.epoch = make_utc(2024, 3, 19, 12);
  tle.inclination_deg = 0.0;
  tle.raan_deg = 0.0;
  tle.eccentricity = 0.0;
  tle.arg_perigee_deg = 0.0;
  tle.mean_anomaly_deg = 0.0;
  tle.mean_motion_rev_per_day = 16.0;
  return tle;
}

PropagationConfig twelve_hours(UtcTime start) {
  PropagationConfig cfg;
  cfg.start = start;
  return cfg;
}

}  // namespace

TEST_CASE("circular orbit radius stays constant over one period") {
  const Tle tle = circular_equatorial();
  const double period = tle.orbital_period_s();
  const double r0 = propagate(tle, tle.epoch).r_eci.norm();
  for (int i = 0; i <= 60; ++i) {
    const double r =
        propagate(tle, tle.epoch.plus_seconds(period * i / 60.0)).r_eci.norm();
    CHECK(std::abs(r - r0) < 1.0);
  }
}

TEST_CASE("ISS-like altitude stays within the LEO band over 12 h") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  const Trajectory traj =
      propagate_trajectory(tle, twelve_hours(make_utc(2024, 3, 20)));
  for (const auto& s : traj.samples) {
    CHECK(s.geodetic.alt_km > 350.0);
    CHECK(s.geodetic.alt_km < 500.0);
  }
}

TEST_CASE("position recurs after one period up to J2 nodal drift") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  const double period = tle.orbital_period_s();
  const UtcTime t0 = make_utc(2024, 3, 20);
  const Vec3 a = propagate(tle, t0).r_eci;
  const Vec3 b = propagate(tle, t0.plus_seconds(period)).r_eci;

  // Oracle: tabulated J2 secular rate. The orbit plane precesses by
  // raan_dot * period; the position offset angle is bounded by that drift
  // (plus the small perigee/anomaly drift), well under 1 degree.
  const double n = tle.mean_motion_rev_per_day * 2.0 * kPi / 86400.0;
  const double sma = std::cbrt(kMuEarth / (n * n));
  const double p = sma;  // e ~ 0
  const double raan_dot = -1.5 * kJ2 * n *
                          (kEarthRadiusKm / p) * (kEarthRadiusKm / p) *
                          std::cos(tle.inclination_deg * kDegToRad);
  const double drift_deg = std::abs(raan_dot) * period * kRadToDeg;
  CHECK(drift_deg < 0.5);  // sanity on the oracle itself (~0.32 for the ISS)

  const double angle =
      std::acos(std::min(1.0, a.dot(b) / (a.norm() * b.norm()))) * kRadToDeg;
  CHECK(angle < 1.0);
}

TEST_CASE("12 h at 30 s step yields 1441 samples") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  const Trajectory traj =
      propagate_trajectory(tle, twelve_hours(make_utc(2024, 3, 20)));
  CHECK(traj.samples.size() == 1441);
  // Uniform spacing.
  for (std::size_t i = 1; i < traj.samples.size(); ++i)
    CHECK(traj.samples[i - 1].t.seconds_until(traj.samples[i].t) ==
          doctest::Approx(30.0));
}

TEST_CASE("horizon equal to one step yields 2 samples") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  PropagationConfig cfg;
  cfg.start = make_utc(2024, 3, 20);
  cfg.horizon_s = 30.0;
  cfg.step_s = 30.0;
  CHECK(propagate_trajectory(tle, cfg).samples.size() == 2);
}

TEST_CASE("ground track regresses westward by roughly Earth rotation") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  const double period = tle.orbital_period_s();
  const UtcTime t0 = make_utc(2024, 3, 20);
  const double lon0 = propagate(tle, t0).geodetic.lon_deg;
  const double lon1 = propagate(tle, t0.plus_seconds(period)).geodetic.lon_deg;
  double westward = lon0 - lon1;
  while (westward < -180.0) westward += 360.0;
  while (westward > 180.0) westward -= 360.0;

  // Oracle: Earth rotation rate x orbital period (sidereal), ~23 deg/orbit.
  const double oracle = 360.0 / 86164.0905 * period;
  CHECK(westward == doctest::Approx(oracle).epsilon(0.05));
  CHECK(oracle == doctest::Approx(22.5).epsilon(0.05));
}

TEST_CASE("specific orbital energy is constant across the trajectory") {
  const Tle tle = testsupport::fixture_tle("sunsync.tle");
  const Trajectory traj =
      propagate_trajectory(tle, twelve_hours(make_utc(2024, 3, 20)));
  const auto energy = [](const StateVector& s) {
    return 0.5 * s.v_eci.dot(s.v_eci) - kMuEarth / s.r_eci.norm();
  };
  const double e0 = energy(traj.samples.front());
  for (const auto& s : traj.samples)
    CHECK(std::abs(energy(s) - e0) / std::abs(e0) < 1e-6);
}

TEST_CASE("orbital period matches the mean motion to 0.1%") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  const Trajectory traj =
      propagate_trajectory(tle, twelve_hours(make_utc(2024, 3, 20)));
  CHECK(traj.orbital_period_s ==
        doctest::Approx(86400.0 / tle.mean_motion_rev_per_day).epsilon(1e-3));
}

TEST_CASE("identical inputs give bit-identical trajectories") {
  const Tle tle = testsupport::fixture_tle("lowincl.tle");
  const auto a = propagate_trajectory(tle, twelve_hours(make_utc(2024, 3, 20)));
  const auto b = propagate_trajectory(tle, twelve_hours(make_utc(2024, 3, 20)));
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].r_eci.x == b.samples[i].r_eci.x);
    CHECK(a.samples[i].r_eci.y == b.samples[i].r_eci.y);
    CHECK(a.samples[i].r_eci.z == b.samples[i].r_eci.z);
    CHECK(a.samples[i].v_eci.x == b.samples[i].v_eci.x);
  }
}

TEST_CASE("decayed orbit is rejected") {
  Tle tle = circular_equatorial();
  tle.mean_motion_rev_per_day = 17.2;  // semi-major axis below 6478 km
  try {
    propagate(tle, tle.epoch);
    FAIL("expected decay error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::orbit_decayed);
  }
}

TEST_CASE("propagation far from the epoch is rejected") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  CHECK_THROWS_AS(propagate(tle, tle.epoch.plus_seconds(8.0 * 86400.0)), Error);
}

TEST_CASE("config validation enforces step, horizon, and sample cap") {
  const Tle tle = testsupport::fixture_tle("iss.tle");
  PropagationConfig cfg;
  cfg.start = make_utc(2024, 3, 20);
  cfg.step_s = 0.0;
  CHECK_THROWS_AS(propagate_trajectory(tle, cfg), Error);
  cfg.step_s = 60.0;
  cfg.horizon_s = 30.0;
  CHECK_THROWS_AS(propagate_trajectory(tle, cfg), Error);
  cfg.step_s = 30.0;
  cfg.horizon_s = 8.0 * 86400.0;  // more than 10080 samples
  CHECK_THROWS_AS(propagate_trajectory(tle, cfg), Error);
}
