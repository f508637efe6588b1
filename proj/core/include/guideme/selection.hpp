#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace guideme {

struct LabelScore {
  std::string label;
  double confidence = 0.0;

  friend bool operator==(const LabelScore&, const LabelScore&) = default;
};

/// Confidence cut-offs: scores under `floor` are discarded, and a label is
/// only accepted at or above `accept`.
struct SelectionPolicy {
  double floor = 0.5;
  double accept = 0.8;

  /// Throws kInvalidArgument unless 0 <= floor <= accept <= 1.
  void validate() const;
};

struct Selection {
  std::optional<std::string> top;
  std::vector<LabelScore> ranked;

  friend bool operator==(const Selection&, const Selection&) = default;
};

/// Descending by confidence, then ascending by label.
void sort_scores(std::vector<LabelScore>& scores);

/**
 * Applies the policy to classifier output.
 *
 * `ranked` holds every score with confidence >= accept (after the floor cut)
 * in descending order, ties by label. `top` is its first element. Unlike a
 * running-max scan seeded with the first score, a single qualifying entry is
 * always selected.
 */
Selection select_place(std::span<const LabelScore> scores,
                       const SelectionPolicy& policy = {});

}  // namespace guideme
