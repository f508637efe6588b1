#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "guideme/catalog.hpp"
#include "guideme/classifier.hpp"
#include "guideme/selection.hpp"

namespace guideme {

// Location status as reported by the client device.
struct LocationAvailable {
  GeoPoint point;
};
struct GpsDisabled {};
struct PermissionDenied {};
using LocationStatus = std::variant<LocationAvailable, GpsDisabled, PermissionDenied>;

struct ManualRequest {
  std::string dua_id;
};
struct LocationRequest {
  LocationStatus status;
};
struct ImageRequest {
  std::vector<std::uint8_t> bytes;
};
using GuideRequest = std::variant<ManualRequest, LocationRequest, ImageRequest>;

enum class ResolutionMode { kManual, kLocation, kImage };
std::string_view to_string(ResolutionMode mode);

struct Diagnostics {
  std::optional<double> distance_m;
  std::optional<std::vector<LabelScore>> label_scores;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

struct GuideResponse {
  ResolutionMode mode = ResolutionMode::kManual;
  std::optional<Place> matched_place;
  std::vector<Dua> duas;
  Diagnostics diagnostics;

  friend bool operator==(const GuideResponse&, const GuideResponse&) = default;
};

/// The single dua with `dua_id`; kNotFound otherwise.
GuideResponse resolve_manual(const Catalog& catalog, std::string_view dua_id);

/**
 * Location mode. Device states map to kGpsActivationRequired and
 * kPermissionRequired; a point outside every geofence is kNotAtKnownPlace.
 * General duas are never returned.
 */
GuideResponse resolve_location(const Catalog& catalog, const LocationStatus& status);

/**
 * Image mode: classify, apply the selection policy, then join the selected
 * label to a place by name. No accepted label is kUnrecognizedScene; a label
 * with no place of that name is kLabelWithoutPlace.
 */
GuideResponse resolve_image(const Catalog& catalog, const Classifier& classifier,
                            std::span<const std::uint8_t> image_bytes,
                            const SelectionPolicy& policy = {});

GuideResponse resolve(const GuideRequest& request, const Catalog& catalog,
                      const Classifier& classifier,
                      const SelectionPolicy& policy = {});

}  // namespace guideme
