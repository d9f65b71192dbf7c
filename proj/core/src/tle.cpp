#include "orbitplan/tle.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "orbitplan/errors.hpp"

namespace orbitplan {

namespace {

// token helpers over fixed 0-indexed column ranges

std::string field(const std::string& line, int begin, int len) {
  return line.substr(begin, len);
}

double parse_real(const std::string& line, int begin, int len,
                  const char* what) {
  const std::string s = field(line, begin, len);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  // Trailing spaces are fine; any other residue is a malformed field.
  for (const char* p = end; p && *p; ++p)
    if (!std::isspace(static_cast<unsigned char>(*p)))
      fail(Errc::tle_bad_field, std::string("unparsable TLE field: ") + what +
                                    " ('" + s + "')");
  if (end == s.c_str())
    fail(Errc::tle_bad_field, std::string("unparsable TLE field: ") + what +
                                  " ('" + s + "')");
  return v;
}

long parse_int(const std::string& line, int begin, int len, const char* what) {
  return static_cast<long>(parse_real(line, begin, len, what));
}

// Assumed-decimal-point field with implied exponent, e.g. " 28829-4" means
// 0.28829e-4 and "0004263" (eccentricity) means 0.0004263.
double parse_implied_decimal(const std::string& s, const char* what) {
  std::string mantissa;
  std::string expo;
  double sign = 1.0;
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1.0;
    ++i;
  }
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      mantissa += s[i];
    } else if (s[i] == '+' || s[i] == '-') {
      expo = s.substr(i);
      break;
    } else if (s[i] == ' ') {
      continue;
    } else {
      fail(Errc::tle_bad_field,
           std::string("unparsable TLE field: ") + what + " ('" + s + "')");
    }
  }
  if (mantissa.empty())
    fail(Errc::tle_bad_field,
         std::string("unparsable TLE field: ") + what + " ('" + s + "')");
  const double frac = std::stod("0." + mantissa);
  int e = 0;
  if (!expo.empty()) e = std::atoi(expo.c_str());
  return sign * frac * std::pow(10.0, e);
}

UtcTime parse_epoch(const std::string& line) {
  const long yy = parse_int(line, 18, 2, "epoch year");
  const double doy = parse_real(line, 20, 12, "epoch day");
  const int year = static_cast<int>(yy <= 56 ? 2000 + yy : 1900 + yy);
  if (doy < 1.0 || doy >= 367.0)
    fail(Errc::tle_bad_field, "epoch day of year out of range");
  return make_utc(year, 1, 1).plus_seconds((doy - 1.0) * 86400.0);
}

void check_line(const std::string& line, char leading) {
  if (line.size() != 69)
    fail(Errc::tle_bad_length, "TLE line must be exactly 69 characters, got " +
                                   std::to_string(line.size()));
  if (line[0] != leading)
    fail(Errc::tle_bad_field, std::string("TLE line must start with '") +
                                  leading + "'");
  const int expect = tle_checksum(line.substr(0, 68));
  if (!std::isdigit(static_cast<unsigned char>(line[68])) ||
      line[68] - '0' != expect)
    fail(Errc::tle_checksum, "TLE checksum mismatch (expected " +
                                 std::to_string(expect) + ")");
}

}  // namespace

int tle_checksum(const std::string& line68) {
  int sum = 0;
  for (char c : line68) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      sum += c - '0';
    else if (c == '-')
      sum += 1;
  }
  return sum % 10;
}

Tle parse_tle(const std::string& line1, const std::string& line2) {
  if (line1.empty() || line2.empty())
    fail(Errc::tle_bad_length, "empty TLE line");
  check_line(line1, '1');
  check_line(line2, '2');

  Tle tle;
  tle.line1 = line1;
  tle.line2 = line2;

  const long cat1 = parse_int(line1, 2, 5, "catalog number");
  const long cat2 = parse_int(line2, 2, 5, "catalog number");
  if (cat1 != cat2)
    fail(Errc::tle_catalog_mismatch,
         "catalog number differs between lines: " + std::to_string(cat1) +
             " vs " + std::to_string(cat2));
  tle.catalog_number = static_cast<int>(cat1);

  tle.epoch = parse_epoch(line1);
  tle.bstar = parse_implied_decimal(field(line1, 53, 8), "bstar");

  tle.inclination_deg = parse_real(line2, 8, 8, "inclination");
  tle.raan_deg = parse_real(line2, 17, 8, "raan");
  tle.eccentricity = parse_implied_decimal(field(line2, 26, 7), "eccentricity");
  tle.arg_perigee_deg = parse_real(line2, 34, 8, "arg perigee");
  tle.mean_anomaly_deg = parse_real(line2, 43, 8, "mean anomaly");
  tle.mean_motion_rev_per_day = parse_real(line2, 52, 11, "mean motion");

  if (tle.inclination_deg < 0.0 || tle.inclination_deg > 180.0)
    fail(Errc::tle_bad_field, "inclination out of [0, 180]");
  if (tle.eccentricity < 0.0 || tle.eccentricity >= 1.0)
    fail(Errc::tle_bad_field, "eccentricity out of [0, 1)");
  if (tle.mean_motion_rev_per_day <= 0.0)
    fail(Errc::tle_bad_field, "mean motion must be positive");
  return tle;
}

}  // namespace orbitplan
