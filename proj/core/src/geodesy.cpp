#include "guideme/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "guideme/error.hpp"

namespace guideme {

GeoPoint::GeoPoint(double lat_deg, double lon_deg) {
  if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg)) {
    throw Error(ErrorCode::kInvalidArgument, "coordinates must be finite");
  }
  if (lat_deg < -90.0 || lat_deg > 90.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "lat out of range [-90, 90]: " + std::to_string(lat_deg));
  }
  lat_ = lat_deg;
  if (lon_deg >= -180.0 && lon_deg < 180.0) {
    lon_ = lon_deg;
  } else {
    double wrapped = std::fmod(lon_deg + 180.0, 360.0);
    if (wrapped < 0.0) wrapped += 360.0;
    lon_ = wrapped - 180.0;
  }
}

EarthModel::EarthModel(double radius_m) : radius_m_(radius_m) {
  if (!(radius_m > 0.0) || !std::isfinite(radius_m)) {
    throw Error(ErrorCode::kInvalidArgument, "earth radius must be positive");
  }
}

double to_radians(double angle_deg) {
  if (!std::isfinite(angle_deg)) {
    throw Error(ErrorCode::kInvalidArgument, "angle must be finite");
  }
  return angle_deg * std::numbers::pi / 180.0;
}

double haversine_distance(const GeoPoint& p1, const GeoPoint& p2,
                          const EarthModel& earth) {
  const double lat1 = to_radians(p1.lat_deg());
  const double lat2 = to_radians(p2.lat_deg());
  // sin^2 is even, so the sign of the differences is irrelevant and
  // symmetry holds exactly.
  const double half_dlat = std::sin((lat1 - lat2) / 2.0);
  const double half_dlon =
      std::sin(to_radians(p1.lon_deg() - p2.lon_deg()) / 2.0);
  double a = half_dlat * half_dlat +
             std::cos(lat1) * std::cos(lat2) * half_dlon * half_dlon;
  a = std::clamp(a, 0.0, 1.0);
  const double c = 2.0 * std::atan2(std::sqrt(a), std::sqrt(1.0 - a));
  return earth.radius_m() * c;
}

bool within_radius(const GeoPoint& p1, const GeoPoint& p2, double radius_m,
                   const EarthModel& earth) {
  if (!(radius_m > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "radius must be positive");
  }
  return haversine_distance(p1, p2, earth) < radius_m;
}

}  // namespace guideme
