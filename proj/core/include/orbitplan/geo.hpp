#pragma once

#include <cmath>

#include "orbitplan/timebase.hpp"

namespace orbitplan {

// WGS-84 constant set, used consistently everywhere (including the shadow
// cylinder radius).
inline constexpr double kEarthRadiusKm = 6378.137;
inline constexpr double kEarthFlattening = 1.0 / 298.257223563;
inline constexpr double kEarthPolarRadiusKm = kEarthRadiusKm * (1.0 - kEarthFlattening);
inline constexpr double kEarthEcc2 = kEarthFlattening * (2.0 - kEarthFlattening);
inline constexpr double kMuEarth = 398600.4418;  // km^3/s^2
inline constexpr double kJ2 = 1.08262668e-3;
inline constexpr double kAuKm = 149597870.7;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

struct GeodeticPoint {
  double lat_deg = 0;
  double lon_deg = 0;
  double alt_km = 0;
};

struct LookAngles {
  double elevation_deg = 0;  // [-90, 90]
  double azimuth_deg = 0;    // [0, 360)
  double slant_range_km = 0;
};

// Rotation about Z by gmst(t); norm preserving.
Vec3 eci_to_ecf(const Vec3& r_eci, UtcTime t);

// Iterative WGS-84 conversion, converged to < 1 m within 10 iterations.
GeodeticPoint ecf_to_geodetic(const Vec3& r_ecf);
Vec3 geodetic_to_ecf(const GeodeticPoint& p);

// Topocentric look angles (south-east-zenith frame) from a ground point to a
// satellite ECF position.
LookAngles look_angles(const GeodeticPoint& station, const Vec3& r_ecf);

inline double wrap_degrees(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d < 0) d += 360.0;
  return d;
}

}  // namespace orbitplan
