#include "guideme/json_io.hpp"

namespace guideme {

using nlohmann::json;

void to_json(json& j, const Place& place) {
  j = json{{"id", place.id},
           {"name", place.name},
           {"lat", place.location.lat_deg()},
           {"lon", place.location.lon_deg()},
           {"geofence_radius_m", place.geofence_radius_m}};
}

void to_json(json& j, const Dua& dua) {
  j = json{{"id", dua.id},
           {"place_id", dua.place_id ? json(*dua.place_id) : json(nullptr)},
           {"title", dua.title},
           {"body", dua.body},
           {"order", dua.order}};
}

void to_json(json& j, const LabelScore& score) {
  j = json{{"label", score.label}, {"confidence", score.confidence}};
}

void to_json(json& j, const Diagnostics& diagnostics) {
  j = json{{"distance_m", diagnostics.distance_m ? json(*diagnostics.distance_m)
                                                 : json(nullptr)},
           {"label_scores", diagnostics.label_scores
                                ? json(*diagnostics.label_scores)
                                : json(nullptr)}};
}

void to_json(json& j, const GuideResponse& response) {
  j = json{{"mode", to_string(response.mode)},
           {"matched_place", response.matched_place ? json(*response.matched_place)
                                                    : json(nullptr)},
           {"duas", response.duas},
           {"diagnostics", response.diagnostics}};
}

void to_json(json& j, const EvaluationReport& report) {
  j = json{{"labels", report.labels},
           {"confusion", report.confusion},
           {"total", report.total},
           {"correct", report.correct},
           {"accuracy", report.accuracy}};
}

json error_body(ErrorCode code, std::string_view message) {
  return json{{"code", to_string(code)}, {"message", message}};
}

json classification_json(const std::vector<LabelScore>& scores,
                         const Selection& selection) {
  return json{{"scores", scores},
              {"selection",
               {{"top", selection.top ? json(*selection.top) : json(nullptr)},
                {"ranked", selection.ranked}}}};
}

json manifest_json(const ReferenceIndex& index) {
  return json::parse(manifest_document(index));
}

}  // namespace guideme
