#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitplan/propagator.hpp"

namespace orbitplan {

enum class Band { S, X, Ka };

struct GroundStation {
  std::string id;
  double lat_deg = 0;
  double lon_deg = 0;
  double alt_km = 0;
  std::string provider;
  std::vector<Band> bands;
  double min_elevation_deg = 5.0;
};

// The built-in 12-station network.
const std::vector<GroundStation>& default_stations();

// X-band downlink defaults. The margin_reference_offset folds receiver
// figure-of-merit and noise-floor terms (not modeled in the explicit margin
// sum) into the BER thresholds; offset 0 recovers the literal thresholds.
struct LinkParams {
  double frequency_ghz = 8.2;
  double tx_power_dbw = 10.0;
  double tx_gain_dbi = 6.0;
  double rx_gain_dbi = 34.0;
  double impl_loss_db = 2.0;
  double atm_loss_db = 0.5;
  double rain_margin_db = 3.0;
  double margin_reference_offset_db = 260.0;
};

struct PassSample {
  UtcTime t;
  double elevation_deg = 0;
  double azimuth_deg = 0;
  double slant_range_km = 0;
};

struct PassPrediction {
  int id = -1;  // ordinal in the merged, AOS-sorted pass list
  std::string station_id;
  UtcTime aos;
  UtcTime los;
  double peak_elevation_deg = 0;
  std::vector<PassSample> samples;
  // Link-budget annotation:
  double mean_data_rate_mbps = 0;
  double worst_margin_db = 0;
  double ber = 0;  // one of 1e-5, 1e-6, 1e-8
  double capacity_mb = 0;

  double duration_s() const { return aos.seconds_until(los); }
};

// Free space path loss in dB for slant range d (km), carrier f (GHz).
double fspl(double d_km, double f_ghz);

// Link margin in dB at slant range d.
double link_margin(const LinkParams& params, double d_km);

// Elevation-tiered achievable data rate in Mbps.
double data_rate(double elevation_deg);

// BER tier from margin (with the configured reference offset applied).
double ber_from_margin(double margin_db, const LinkParams& params);

// Maximal runs of samples at/above the station's minimum elevation.
// Zero-duration (single-sample) runs are discarded so that LOS > AOS holds.
std::vector<PassPrediction> detect_passes(const Trajectory& traj,
                                          const GroundStation& station);

// Fill mean data rate, worst margin, BER tier, and pass capacity (MB).
PassPrediction annotate_link_budget(PassPrediction pass,
                                    const LinkParams& params);

// All stations' passes, annotated, sorted by (AOS, station), ids assigned.
std::vector<PassPrediction> predict_passes(
    const Trajectory& traj, const std::vector<GroundStation>& stations,
    const LinkParams& params);

}  // namespace orbitplan
