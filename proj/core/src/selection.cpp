#include "guideme/selection.hpp"

#include <algorithm>

#include "guideme/error.hpp"

namespace guideme {

void SelectionPolicy::validate() const {
  if (!(0.0 <= floor && floor <= accept && accept <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "selection policy requires 0 <= floor <= accept <= 1");
  }
}

void sort_scores(std::vector<LabelScore>& scores) {
  std::sort(scores.begin(), scores.end(),
            [](const LabelScore& a, const LabelScore& b) {
              if (a.confidence != b.confidence) return a.confidence > b.confidence;
              return a.label < b.label;
            });
}

Selection select_place(std::span<const LabelScore> scores,
                       const SelectionPolicy& policy) {
  policy.validate();
  Selection out;
  for (const auto& s : scores) {
    if (!(s.confidence >= 0.0 && s.confidence <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "confidence of '" + s.label + "' outside [0, 1]");
    }
    if (s.confidence < policy.floor) continue;
    if (s.confidence >= policy.accept) out.ranked.push_back(s);
  }
  sort_scores(out.ranked);
  if (!out.ranked.empty()) out.top = out.ranked.front().label;
  return out;
}

}  // namespace guideme
