#pragma once

#include <string>

#include "orbitplan/timebase.hpp"

namespace orbitplan {

// Parsed mean orbital elements from a standard 69-column two-line element set.
struct Tle {
  int catalog_number = 0;
  UtcTime epoch;
  double inclination_deg = 0;
  double raan_deg = 0;
  double eccentricity = 0;
  double arg_perigee_deg = 0;
  double mean_anomaly_deg = 0;
  double mean_motion_rev_per_day = 0;
  double bstar = 0;  // 1/earth-radii
  std::string line1;
  std::string line2;

  double orbital_period_s() const { return 86400.0 / mean_motion_rev_per_day; }
};

// Fixed-column parse with modulo-10 checksum validation. Distinct errors for
// bad length, checksum mismatch, unparsable fields, and catalog mismatch
// between the two lines.
Tle parse_tle(const std::string& line1, const std::string& line2);

// Modulo-10 TLE line checksum over the first 68 columns ('-' counts as 1).
int tle_checksum(const std::string& line68);

}  // namespace orbitplan
