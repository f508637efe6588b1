#include "guideme/resolver.hpp"

#include <type_traits>

#include "guideme/error.hpp"

namespace guideme {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string_view to_string(ResolutionMode mode) {
  switch (mode) {
    case ResolutionMode::kManual: return "manual";
    case ResolutionMode::kLocation: return "location";
    case ResolutionMode::kImage: return "image";
  }
  return "unknown";
}

GuideResponse resolve_manual(const Catalog& catalog, std::string_view dua_id) {
  const Dua* dua = catalog.find_dua(dua_id);
  if (dua == nullptr) {
    throw Error(ErrorCode::kNotFound, "unknown dua id '" + std::string(dua_id) + "'");
  }
  GuideResponse out;
  out.mode = ResolutionMode::kManual;
  if (dua->place_id) out.matched_place = *catalog.find_place(*dua->place_id);
  out.duas.push_back(*dua);
  return out;
}

GuideResponse resolve_location(const Catalog& catalog, const LocationStatus& status) {
  return std::visit(
      Overloaded{
          [](const GpsDisabled&) -> GuideResponse {
            throw Error(ErrorCode::kGpsActivationRequired,
                        "location services are disabled; enable GPS and retry");
          },
          [](const PermissionDenied&) -> GuideResponse {
            throw Error(ErrorCode::kPermissionRequired,
                        "location permission not granted; grant it and retry");
          },
          [&](const LocationAvailable& available) -> GuideResponse {
            auto match = nearest_place(catalog, available.point);
            if (!match) {
              throw Error(ErrorCode::kNotAtKnownPlace,
                          "no known place within its geofence of (" +
                              std::to_string(available.point.lat_deg()) + ", " +
                              std::to_string(available.point.lon_deg()) + ")");
            }
            GuideResponse out;
            out.mode = ResolutionMode::kLocation;
            out.duas = duas_for_place(catalog, match->place.id);
            out.diagnostics.distance_m = match->distance_m;
            out.matched_place = std::move(match->place);
            return out;
          },
      },
      status);
}

GuideResponse resolve_image(const Catalog& catalog, const Classifier& classifier,
                            std::span<const std::uint8_t> image_bytes,
                            const SelectionPolicy& policy) {
  const auto scores = classifier.classify(image_bytes);
  Selection selection = select_place(scores, policy);
  if (!selection.top) {
    std::string best = scores.empty() ? "no labels"
                                      : scores.front().label + " at " +
                                            std::to_string(scores.front().confidence);
    throw Error(ErrorCode::kUnrecognizedScene,
                "no label reached the acceptance threshold (best: " + best + ")");
  }
  const Place* place = catalog.find_place_by_name(*selection.top);
  if (place == nullptr) {
    throw Error(ErrorCode::kLabelWithoutPlace,
                "model label '" + *selection.top + "' has no place in the catalog");
  }
  GuideResponse out;
  out.mode = ResolutionMode::kImage;
  out.matched_place = *place;
  out.duas = duas_for_place(catalog, place->id);
  out.diagnostics.label_scores = std::move(selection.ranked);
  return out;
}

GuideResponse resolve(const GuideRequest& request, const Catalog& catalog,
                      const Classifier& classifier, const SelectionPolicy& policy) {
  return std::visit(
      Overloaded{
          [&](const ManualRequest& r) { return resolve_manual(catalog, r.dua_id); },
          [&](const LocationRequest& r) { return resolve_location(catalog, r.status); },
          [&](const ImageRequest& r) {
            return resolve_image(catalog, classifier, r.bytes, policy);
          },
      },
      request);
}

}  // namespace guideme
