#pragma once

namespace guideme {

/// Mean Earth radius used for all great-circle math, in meters.
inline constexpr double kEarthRadiusMeters = 6371000.0;

/// Geofence radius applied to places that do not declare one, in meters.
inline constexpr double kDefaultGeofenceRadiusMeters = 21.0;

/**
 * Latitude/longitude pair in degrees.
 *
 * Latitude must lie in [-90, 90]; longitude is wrapped into [-180, 180)
 * so that 185 becomes -175 and 180 becomes -180. Non-finite input is
 * rejected with ErrorCode::kInvalidArgument.
 */
class GeoPoint {
 public:
  GeoPoint(double lat_deg, double lon_deg);

  double lat_deg() const noexcept { return lat_; }
  double lon_deg() const noexcept { return lon_; }

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  double lat_;
  double lon_;
};

/// Spherical Earth. Only the radius is configurable, and only for tests.
class EarthModel {
 public:
  EarthModel() = default;
  explicit EarthModel(double radius_m);

  double radius_m() const noexcept { return radius_m_; }

 private:
  double radius_m_ = kEarthRadiusMeters;
};

double to_radians(double angle_deg);

/**
 * Great-circle distance in meters using the haversine form:
 *
 *   a = sin^2(dlat/2) + cos(lat1) cos(lat2) sin^2(dlon/2), clamped to [0, 1]
 *   c = 2 atan2(sqrt(a), sqrt(1 - a))
 *
 * The result lies in [0, pi * radius]. The argument order does not matter:
 * the expression is symmetric term by term, so swapping points yields the
 * same bits.
 */
double haversine_distance(const GeoPoint& p1, const GeoPoint& p2,
                          const EarthModel& earth = {});

/// True iff the distance is strictly less than radius_m.
bool within_radius(const GeoPoint& p1, const GeoPoint& p2, double radius_m,
                   const EarthModel& earth = {});

}  // namespace guideme
