#include "orbitplan/geo.hpp"

#include <algorithm>

#include "orbitplan/errors.hpp"

namespace orbitplan {

Vec3 eci_to_ecf(const Vec3& r_eci, UtcTime t) {
  const double theta = gmst(t);
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * r_eci.x + s * r_eci.y, -s * r_eci.x + c * r_eci.y, r_eci.z};
}

GeodeticPoint ecf_to_geodetic(const Vec3& r) {
  const double p = std::hypot(r.x, r.y);
  const double lon = std::atan2(r.y, r.x);

  // Near the rotation axis latitude is +/-90 and longitude is unconstrained.
  if (p < 1e-6) {
    return {r.z >= 0 ? 90.0 : -90.0, 0.0,
            std::abs(r.z) - kEarthPolarRadiusKm};
  }

  double lat = std::atan2(r.z, p * (1.0 - kEarthEcc2));
  bool converged = false;
  for (int i = 0; i < 10; ++i) {
    const double sin_lat = std::sin(lat);
    const double n = kEarthRadiusKm / std::sqrt(1.0 - kEarthEcc2 * sin_lat * sin_lat);
    const double alt = p / std::cos(lat) - n;
    const double next =
        std::atan2(r.z, p * (1.0 - kEarthEcc2 * n / (n + alt)));
    // Sub-meter tolerance expressed as an arc at Earth radius.
    if (std::abs(next - lat) * kEarthRadiusKm < 1e-4) {
      lat = next;
      converged = true;
      break;
    }
    lat = next;
  }
  if (!converged)
    fail(Errc::geodetic_nonconvergence, "geodetic iteration did not converge");
  const double sin_lat = std::sin(lat);
  const double n = kEarthRadiusKm / std::sqrt(1.0 - kEarthEcc2 * sin_lat * sin_lat);
  const double alt = p / std::cos(lat) - n;
  return {lat * kRadToDeg, lon * kRadToDeg, alt};
}

Vec3 geodetic_to_ecf(const GeodeticPoint& pt) {
  const double lat = pt.lat_deg * kDegToRad;
  const double lon = pt.lon_deg * kDegToRad;
  const double sin_lat = std::sin(lat), cos_lat = std::cos(lat);
  const double n = kEarthRadiusKm / std::sqrt(1.0 - kEarthEcc2 * sin_lat * sin_lat);
  return {(n + pt.alt_km) * cos_lat * std::cos(lon),
          (n + pt.alt_km) * cos_lat * std::sin(lon),
          (n * (1.0 - kEarthEcc2) + pt.alt_km) * sin_lat};
}

LookAngles look_angles(const GeodeticPoint& station, const Vec3& r_ecf) {
  const Vec3 site = geodetic_to_ecf(station);
  const Vec3 rho = r_ecf - site;

  const double lat = station.lat_deg * kDegToRad;
  const double lon = station.lon_deg * kDegToRad;
  const double sin_lat = std::sin(lat), cos_lat = std::cos(lat);
  const double sin_lon = std::sin(lon), cos_lon = std::cos(lon);

  const double south = sin_lat * cos_lon * rho.x + sin_lat * sin_lon * rho.y -
                       cos_lat * rho.z;
  const double east = -sin_lon * rho.x + cos_lon * rho.y;
  const double zenith = cos_lat * cos_lon * rho.x + cos_lat * sin_lon * rho.y +
                        sin_lat * rho.z;

  const double range = rho.norm();
  LookAngles out;
  out.slant_range_km = range;
  out.elevation_deg = std::asin(std::clamp(zenith / range, -1.0, 1.0)) * kRadToDeg;
  out.azimuth_deg = wrap_degrees(std::atan2(east, -south) * kRadToDeg);
  return out;
}

}  // namespace orbitplan
