#include "orbitplan/errors.hpp"

namespace orbitplan {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::tle_bad_length: return "tle_bad_length";
    case Errc::tle_checksum: return "tle_checksum";
    case Errc::tle_bad_field: return "tle_bad_field";
    case Errc::tle_catalog_mismatch: return "tle_catalog_mismatch";
    case Errc::time_out_of_range: return "time_out_of_range";
    case Errc::geodetic_nonconvergence: return "geodetic_nonconvergence";
    case Errc::kepler_nonconvergence: return "kepler_nonconvergence";
    case Errc::orbit_decayed: return "orbit_decayed";
    case Errc::bad_config: return "bad_config";
    case Errc::illumination_gap: return "illumination_gap";
    case Errc::workload_duplicate_id: return "workload_duplicate_id";
    case Errc::workload_dangling_edge: return "workload_dangling_edge";
    case Errc::workload_cycle: return "workload_cycle";
    case Errc::unknown_preset: return "unknown_preset";
    case Errc::transfer_no_capacity: return "transfer_no_capacity";
    case Errc::deadline_exceeded: return "deadline_exceeded";
    case Errc::no_feasible_window: return "no_feasible_window";
    case Errc::tle_network: return "tle_network";
    case Errc::tle_not_found: return "tle_not_found";
    case Errc::tle_malformed_response: return "tle_malformed_response";
    case Errc::bad_request: return "bad_request";
  }
  return "unknown";
}

bool is_planning_failure(Errc code) noexcept {
  switch (code) {
    case Errc::transfer_no_capacity:
    case Errc::deadline_exceeded:
    case Errc::no_feasible_window:
    case Errc::orbit_decayed:
    case Errc::kepler_nonconvergence:
    case Errc::geodetic_nonconvergence:
      return true;
    default:
      return false;
  }
}

}  // namespace orbitplan
