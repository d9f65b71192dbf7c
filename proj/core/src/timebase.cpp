#include "orbitplan/timebase.hpp"

#include <cmath>
#include <cstdio>

#include "orbitplan/errors.hpp"

namespace orbitplan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kMsPerDay = 86400000.0;
// Unix epoch 1970-01-01T00:00:00Z as a Julian date.
constexpr double kJdUnixEpoch = 2440587.5;
constexpr double kJdJ2000 = 2451545.0;

// Days from civil date to 1970-01-01 (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y += m <= 2;
}

}  // namespace

UtcTime UtcTime::from_unix_seconds(double s) {
  return from_unix_ms(static_cast<std::int64_t>(std::llround(s * 1000.0)));
}

UtcTime UtcTime::plus_seconds(double s) const {
  return from_unix_ms(ms_ + static_cast<std::int64_t>(std::llround(s * 1000.0)));
}

UtcTime make_utc(int year, int month, int day, int hour, int minute,
                 int second, int millisecond) {
  const std::int64_t days = days_from_civil(year, month, day);
  const std::int64_t ms = ((days * 24 + hour) * 60 + minute) * 60000LL +
                          second * 1000LL + millisecond;
  return UtcTime::from_unix_ms(ms);
}

UtcTime parse_iso8601(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0;
  double sec = 0.0;
  const int n = std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%lf", &y, &mo, &d,
                            &h, &mi, &sec);
  if (n < 3) fail(Errc::bad_request, "unparsable timestamp: " + text);
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || sec >= 61.0)
    fail(Errc::bad_request, "timestamp field out of range: " + text);
  const int whole = static_cast<int>(sec);
  const int ms = static_cast<int>(std::lround((sec - whole) * 1000.0));
  return make_utc(y, mo, d, h, mi, whole, ms);
}

std::string to_iso8601(UtcTime t) {
  std::int64_t ms = t.unix_ms();
  std::int64_t day = ms / 86400000;
  std::int64_t rem = ms - day * 86400000;
  if (rem < 0) {
    rem += 86400000;
    day -= 1;
  }
  int y, mo, d;
  civil_from_days(day, y, mo, d);
  const int h = static_cast<int>(rem / 3600000);
  const int mi = static_cast<int>(rem / 60000 % 60);
  const int s = static_cast<int>(rem / 1000 % 60);
  const int frac = static_cast<int>(rem % 1000);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", y, mo,
                d, h, mi, s, frac);
  return buf;
}

double julian_date(UtcTime t) {
  const double jd = kJdUnixEpoch + static_cast<double>(t.unix_ms()) / kMsPerDay;
  // Supported era bounds (TLE epoch convention and polynomial validity).
  if (t < make_utc(1957, 1, 1) || t > make_utc(2100, 12, 31))
    fail(Errc::time_out_of_range, "time outside supported range: " + to_iso8601(t));
  return jd;
}

double julian_centuries_j2000(UtcTime t) {
  return (julian_date(t) - kJdJ2000) / 36525.0;
}

double gmst(UtcTime t) {
  const double tc = julian_centuries_j2000(t);
  // IAU-1982 expression, seconds of sidereal time.
  double sec = 67310.54841 +
               (876600.0 * 3600.0 + 8640184.812866) * tc +
               0.093104 * tc * tc - 6.2e-6 * tc * tc * tc;
  double frac = std::fmod(sec, 86400.0);
  if (frac < 0) frac += 86400.0;
  return frac / 86400.0 * kTwoPi;
}

}  // namespace orbitplan
