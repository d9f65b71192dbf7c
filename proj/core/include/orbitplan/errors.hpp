#pragma once

#include <stdexcept>
#include <string>

namespace orbitplan {

// Machine-readable failure codes, surfaced verbatim in CLI and HTTP output.
enum class Errc {
  tle_bad_length,
  tle_checksum,
  tle_bad_field,
  tle_catalog_mismatch,
  time_out_of_range,
  geodetic_nonconvergence,
  kepler_nonconvergence,
  orbit_decayed,
  bad_config,
  illumination_gap,
  workload_duplicate_id,
  workload_dangling_edge,
  workload_cycle,
  unknown_preset,
  transfer_no_capacity,
  deadline_exceeded,
  no_feasible_window,
  tle_network,
  tle_not_found,
  tle_malformed_response,
  bad_request,
};

const char* errc_name(Errc code) noexcept;

// Planning failures (exit code 2) as opposed to input errors (exit code 1).
bool is_planning_failure(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace orbitplan
