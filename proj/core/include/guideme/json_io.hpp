#pragma once

#include <nlohmann/json.hpp>

#include "guideme/catalog.hpp"
#include "guideme/classifier.hpp"
#include "guideme/error.hpp"
#include "guideme/resolver.hpp"

// Wire schemas shared by the HTTP service and `guideme --json`.
namespace guideme {

void to_json(nlohmann::json& j, const Place& place);
void to_json(nlohmann::json& j, const Dua& dua);
void to_json(nlohmann::json& j, const LabelScore& score);
void to_json(nlohmann::json& j, const Diagnostics& diagnostics);
void to_json(nlohmann::json& j, const GuideResponse& response);
void to_json(nlohmann::json& j, const EvaluationReport& report);

/// {"code": "...", "message": "..."}
nlohmann::json error_body(ErrorCode code, std::string_view message);

/// {"scores": [...], "selection": {"top": ..., "ranked": [...]}}
nlohmann::json classification_json(const std::vector<LabelScore>& scores,
                                   const Selection& selection);

/// The manifest as stored on disk.
nlohmann::json manifest_json(const ReferenceIndex& index);

}  // namespace guideme
