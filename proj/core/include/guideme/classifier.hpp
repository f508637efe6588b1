#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "guideme/reference_index.hpp"
#include "guideme/selection.hpp"

namespace guideme {

/// Image classifier backend. Implementations return one score per label,
/// confidences summing to 1, sorted with sort_scores().
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual std::vector<LabelScore> classify(
      std::span<const std::uint8_t> image_bytes) const = 0;
  virtual const ModelManifest& manifest() const = 0;
};

/**
 * Nearest-neighbor softmax over a reference index.
 *
 * For each label the distance is the minimum Euclidean distance from the
 * query descriptor to that label's references; confidence is
 * exp(-d / tau) normalized over labels, tau taken from the manifest.
 */
std::vector<LabelScore> classify(const ImageDescriptor& query,
                                 const ReferenceIndex& index);
std::vector<LabelScore> classify(std::span<const std::uint8_t> image_bytes,
                                 const ReferenceIndex& index);

class NearestNeighborClassifier final : public Classifier {
 public:
  explicit NearestNeighborClassifier(std::shared_ptr<const ReferenceIndex> index);

  std::vector<LabelScore> classify(
      std::span<const std::uint8_t> image_bytes) const override;
  const ModelManifest& manifest() const override { return index_->manifest(); }

  const ReferenceIndex& index() const noexcept { return *index_; }

 private:
  std::shared_ptr<const ReferenceIndex> index_;
};

struct EvaluationReport {
  std::vector<std::string> labels;
  /// confusion[true][predicted], both indexed like `labels`.
  std::vector<std::vector<std::size_t>> confusion;
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
};

/// Top-1 accuracy of the index over `test_root/<label>/<images>`.
EvaluationReport evaluate_index(const ReferenceIndex& index,
                                const std::filesystem::path& test_root);

}  // namespace guideme
