#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guideme/geodesy.hpp"

namespace guideme {

struct Place {
  std::string id;
  /// Display name. Also the join key against classifier labels.
  std::string name;
  GeoPoint location;
  double geofence_radius_m = kDefaultGeofenceRadiusMeters;

  friend bool operator==(const Place&, const Place&) = default;
};

/// A content item. Without a place_id it is general content.
struct Dua {
  std::string id;
  std::optional<std::string> place_id;
  std::string title;
  std::string body;
  std::uint32_t order = 0;

  friend bool operator==(const Dua&, const Dua&) = default;
};

struct PlaceMatch {
  Place place;
  double distance_m = 0.0;
};

/**
 * Immutable, fully validated set of places and duas.
 *
 * Construction enforces unique non-empty ids and names, positive geofence
 * radii, referential integrity of dua place ids and unique (place_id, order)
 * pairs. Invalid input throws ErrorCode::kValidationError.
 */
class Catalog {
 public:
  Catalog() = default;
  Catalog(std::string version, std::vector<Place> places,
          std::vector<Dua> duas);

  const std::string& version() const noexcept { return version_; }
  const std::vector<Place>& places() const noexcept { return places_; }
  const std::vector<Dua>& duas() const noexcept { return duas_; }

  const Place* find_place(std::string_view id) const;
  const Place* find_place_by_name(std::string_view name) const;
  const Dua* find_dua(std::string_view id) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::string version_;
  std::vector<Place> places_;
  std::vector<Dua> duas_;
};

/// Parses a catalog document. `source` names the input in error messages.
Catalog parse_catalog(std::string_view text, std::string_view source = "catalog");

/// Reads and parses a catalog file. A missing file is kNotFound.
Catalog load_catalog(const std::filesystem::path& path);

/// All duas ordered by (place name, order, id). General duas carry an empty
/// place name and therefore come first.
std::vector<Dua> list_duas(const Catalog& catalog);

/// Duas attached to `place_id`, ascending by order. Unknown ids are kNotFound.
std::vector<Dua> duas_for_place(const Catalog& catalog, std::string_view place_id);

/**
 * Closest place whose geofence contains `point`, ties broken by smallest id.
 *
 * Every place is examined, so the answer does not depend on the order of
 * places in the catalog.
 */
std::optional<PlaceMatch> nearest_place(const Catalog& catalog,
                                        const GeoPoint& point);

}  // namespace guideme
