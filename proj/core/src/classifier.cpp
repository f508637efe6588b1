#include "guideme/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dataset_scan.hpp"
#include "guideme/error.hpp"

namespace guideme {

std::vector<LabelScore> classify(const ImageDescriptor& query,
                                 const ReferenceIndex& index) {
  if (index.empty()) {
    throw Error(ErrorCode::kInvalidState, "reference index is empty");
  }
  const auto& labels = index.manifest().labels;
  std::vector<double> nearest(labels.size(),
                              std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (const auto& e : index.entries()[i]) {
      nearest[i] = std::min(nearest[i], euclidean_distance(query, e.descriptor));
    }
  }
  // Shift by the smallest distance so the best label weighs exactly 1.
  const double closest = *std::min_element(nearest.begin(), nearest.end());
  const double tau = index.manifest().descriptor_params.temperature;
  std::vector<double> weights(labels.size());
  double total = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    weights[i] = std::exp(-(nearest[i] - closest) / tau);
    total += weights[i];
  }
  std::vector<LabelScore> scores;
  scores.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    scores.push_back({labels[i], weights[i] / total});
  }
  sort_scores(scores);
  return scores;
}

std::vector<LabelScore> classify(std::span<const std::uint8_t> image_bytes,
                                 const ReferenceIndex& index) {
  if (index.empty()) {
    throw Error(ErrorCode::kInvalidState, "reference index is empty");
  }
  const RgbImage image = decode_image(image_bytes);
  return classify(extract_descriptor(image, index.manifest().descriptor_params),
                  index);
}

NearestNeighborClassifier::NearestNeighborClassifier(
    std::shared_ptr<const ReferenceIndex> index)
    : index_(std::move(index)) {
  if (!index_ || index_->empty()) {
    throw Error(ErrorCode::kInvalidState, "reference index is empty");
  }
}

std::vector<LabelScore> NearestNeighborClassifier::classify(
    std::span<const std::uint8_t> image_bytes) const {
  return guideme::classify(image_bytes, *index_);
}

EvaluationReport evaluate_index(const ReferenceIndex& index,
                                const std::filesystem::path& test_root) {
  if (index.empty()) {
    throw Error(ErrorCode::kInvalidState, "reference index is empty");
  }
  EvaluationReport report;
  report.labels = index.manifest().labels;
  const std::size_t n = report.labels.size();
  report.confusion.assign(n, std::vector<std::size_t>(n, 0));
  auto position = [&](const std::string& label) {
    return std::size_t(std::find(report.labels.begin(), report.labels.end(), label) -
                       report.labels.begin());
  };

  for (const auto& folder : detail::scan_label_folders(test_root)) {
    const std::size_t truth = position(folder.label);
    if (truth == n) {
      throw Error(ErrorCode::kValidationError,
                  "test label '" + folder.label + "' is not in the index");
    }
    for (const auto& file : folder.files) {
      std::vector<LabelScore> scores;
      try {
        scores = classify(read_file_bytes(file), index);
      } catch (const Error& e) {
        throw Error(e.code(), file.string() + ": " + e.what());
      }
      const std::size_t predicted = position(scores.front().label);
      ++report.confusion[truth][predicted];
      ++report.total;
      if (predicted == truth) ++report.correct;
    }
  }
  if (report.total == 0) {
    throw Error(ErrorCode::kValidationError,
                "test set under " + test_root.string() + " has no images");
  }
  report.accuracy = double(report.correct) / double(report.total);
  return report;
}

}  // namespace guideme
