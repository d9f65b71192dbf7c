#pragma once

#include <cstdint>
#include <string>

namespace orbitplan {

// UTC instant at millisecond resolution. Leap seconds are ignored; the
// accumulated error is far below the 30 s propagation step.
class UtcTime {
 public:
  constexpr UtcTime() = default;
  static constexpr UtcTime from_unix_ms(std::int64_t ms) { return UtcTime(ms); }
  static UtcTime from_unix_seconds(double s);

  constexpr std::int64_t unix_ms() const { return ms_; }
  double unix_seconds() const { return static_cast<double>(ms_) / 1000.0; }

  UtcTime plus_seconds(double s) const;
  double seconds_until(UtcTime later) const {
    return static_cast<double>(later.ms_ - ms_) / 1000.0;
  }

  constexpr auto operator<=>(const UtcTime&) const = default;

 private:
  explicit constexpr UtcTime(std::int64_t ms) : ms_(ms) {}
  std::int64_t ms_ = 0;
};

// Calendar construction (proleptic Gregorian, UTC).
UtcTime make_utc(int year, int month, int day, int hour = 0, int minute = 0,
                 int second = 0, int millisecond = 0);

// Accepts "YYYY-MM-DDTHH:MM:SS[.mmm]Z" (trailing Z optional).
UtcTime parse_iso8601(const std::string& text);
std::string to_iso8601(UtcTime t);

// Astronomical Julian date in days. Valid for years 1957-2100.
double julian_date(UtcTime t);

// Julian centuries since the J2000.0 epoch (JD 2451545.0).
double julian_centuries_j2000(UtcTime t);

// Greenwich mean sidereal time, IAU-1982 polynomial, radians in [0, 2pi).
double gmst(UtcTime t);

}  // namespace orbitplan
