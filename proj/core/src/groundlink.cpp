#include "orbitplan/groundlink.hpp"

#include <algorithm>
#include <cmath>

#include "orbitplan/errors.hpp"

namespace orbitplan {

const std::vector<GroundStation>& default_stations() {
  static const std::vector<GroundStation> stations = {
      {"svalbard", 78.23, 15.39, 0.0, "KSAT", {Band::S, Band::X, Band::Ka}, 5.0},
      {"troll", -72.01, 2.53, 0.0, "KSAT", {Band::S, Band::X}, 5.0},
      {"awarua", -46.53, 168.38, 0.0, "KSAT", {Band::S, Band::X}, 5.0},
      {"fairbanks", 64.86, -147.85, 0.0, "NASA", {Band::S, Band::X, Band::Ka}, 5.0},
      {"wallops", 37.94, -75.47, 0.0, "NASA", {Band::S, Band::X}, 5.0},
      {"mcmurdo", -77.85, 166.67, 0.0, "NASA", {Band::S, Band::X}, 5.0},
      {"singapore", 1.35, 103.82, 0.0, "AWS", {Band::S, Band::X}, 5.0},
      {"bahrain", 26.07, 50.56, 0.0, "AWS", {Band::S, Band::X}, 5.0},
      {"oregon", 43.80, -120.55, 0.0, "AWS", {Band::S, Band::X, Band::Ka}, 5.0},
      {"capetown", -33.93, 18.42, 0.0, "AWS", {Band::S, Band::X}, 5.0},
      {"stockholm", 59.33, 18.07, 0.0, "AWS", {Band::S, Band::X}, 5.0},
      {"sydney", -33.87, 151.21, 0.0, "AWS", {Band::S, Band::X}, 5.0},
  };
  return stations;
}

double fspl(double d_km, double f_ghz) {
  return 20.0 * std::log10(d_km) + 20.0 * std::log10(f_ghz) + 92.45;
}

double link_margin(const LinkParams& p, double d_km) {
  return p.tx_power_dbw + p.tx_gain_dbi + p.rx_gain_dbi -
         fspl(d_km, p.frequency_ghz) - p.impl_loss_db - p.atm_loss_db -
         p.rain_margin_db;
}

double data_rate(double elevation_deg) {
  if (elevation_deg < 5.0) return 0.0;
  if (elevation_deg < 10.0) return 25.0;
  if (elevation_deg < 20.0) return 50.0;
  if (elevation_deg < 40.0) return 80.0;
  if (elevation_deg < 60.0) return 100.0;
  return 120.0;
}

double ber_from_margin(double margin_db, const LinkParams& params) {
  const double effective = margin_db + params.margin_reference_offset_db;
  if (effective > 140.0) return 1e-8;
  if (effective > 135.0) return 1e-6;
  return 1e-5;
}

std::vector<PassPrediction> detect_passes(const Trajectory& traj,
                                          const GroundStation& station) {
  if (traj.samples.empty())
    fail(Errc::bad_config, "pass detection requires a non-empty trajectory");
  const GeodeticPoint site{station.lat_deg, station.lon_deg, station.alt_km};

  std::vector<PassPrediction> passes;
  PassPrediction current;
  bool in_pass = false;

  auto finish = [&]() {
    if (!in_pass) return;
    in_pass = false;
    // A single above-threshold sample has zero duration; not a usable pass.
    if (current.samples.size() < 2) return;
    current.aos = current.samples.front().t;
    current.los = current.samples.back().t;
    passes.push_back(std::move(current));
  };

  for (const auto& sv : traj.samples) {
    const LookAngles look = look_angles(site, sv.r_ecf);
    if (look.elevation_deg >= station.min_elevation_deg) {
      if (!in_pass) {
        current = PassPrediction{};
        current.station_id = station.id;
        in_pass = true;
      }
      current.samples.push_back(
          {sv.t, look.elevation_deg, look.azimuth_deg, look.slant_range_km});
      current.peak_elevation_deg =
          std::max(current.peak_elevation_deg, look.elevation_deg);
    } else {
      finish();
    }
  }
  finish();
  return passes;
}

PassPrediction annotate_link_budget(PassPrediction pass,
                                    const LinkParams& params) {
  if (pass.samples.empty())
    fail(Errc::bad_config, "link budget needs at least one pass sample");

  double rate_sum = 0.0;
  double worst = link_margin(params, pass.samples.front().slant_range_km);
  for (const auto& s : pass.samples) {
    rate_sum += data_rate(s.elevation_deg);
    worst = std::min(worst, link_margin(params, s.slant_range_km));
  }
  pass.mean_data_rate_mbps = rate_sum / static_cast<double>(pass.samples.size());
  pass.worst_margin_db = worst;
  pass.ber = ber_from_margin(worst, params);
  pass.capacity_mb = pass.mean_data_rate_mbps * pass.duration_s() / 8.0;
  return pass;
}

std::vector<PassPrediction> predict_passes(
    const Trajectory& traj, const std::vector<GroundStation>& stations,
    const LinkParams& params) {
  std::vector<PassPrediction> all;
  for (const auto& station : stations)
    for (auto& pass : detect_passes(traj, station))
      all.push_back(annotate_link_budget(std::move(pass), params));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.aos != b.aos) return a.aos < b.aos;
    return a.station_id < b.station_id;
  });
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i].id = static_cast<int>(i);
  return all;
}

}  // namespace orbitplan
