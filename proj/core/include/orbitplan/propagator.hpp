#pragma once

#include <vector>

#include "orbitplan/geo.hpp"
#include "orbitplan/tle.hpp"

namespace orbitplan {

struct PropagationConfig {
  double horizon_s = 43200.0;  // 12 h default
  double step_s = 30.0;
  UtcTime start;

  void validate() const;
};

struct StateVector {
  UtcTime t;
  Vec3 r_eci;  // km
  Vec3 v_eci;  // km/s
  Vec3 r_ecf;  // km
  GeodeticPoint geodetic;
};

struct Trajectory {
  std::vector<StateVector> samples;  // uniform spacing, strictly increasing
  double step_s = 30.0;
  double orbital_period_s = 0.0;

  UtcTime start() const { return samples.front().t; }
  UtcTime end() const { return samples.back().t; }
};

// Trajectory source. The built-in implementation solves Kepler's equation for
// the osculating orbit defined by the TLE mean elements and applies J2 secular
// rates to RAAN, argument of perigee, and mean anomaly. A full SGP4
// implementation can be substituted behind this interface.
class Propagator {
 public:
  virtual ~Propagator() = default;
  virtual StateVector at(const Tle& tle, UtcTime t) const = 0;
};

class KeplerJ2Propagator final : public Propagator {
 public:
  StateVector at(const Tle& tle, UtcTime t) const override;
};

const Propagator& default_propagator();

// Single-epoch state from the built-in propagator. Valid for |t - epoch| up
// to 7 days.
StateVector propagate(const Tle& tle, UtcTime t);

// horizon/step + 1 uniformly spaced samples starting at cfg.start.
Trajectory propagate_trajectory(const Tle& tle, const PropagationConfig& cfg,
                                const Propagator& prop = default_propagator());

}  // namespace orbitplan
