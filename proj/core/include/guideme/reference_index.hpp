#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "guideme/descriptor.hpp"

namespace guideme {

/// Metadata document stored as manifest.json next to the descriptor table.
struct ModelManifest {
  std::string name = "guideme-reference";
  std::string version = "1";
  std::vector<std::string> labels;
  DescriptorParams descriptor_params;

  friend bool operator==(const ModelManifest&, const ModelManifest&) = default;
};

struct IndexEntry {
  /// Path relative to the training root, e.g. "Zamzam/007.png".
  std::string source;
  ImageDescriptor descriptor;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

/**
 * Labelled reference descriptors for nearest-neighbor classification.
 *
 * `entries()[i]` holds the descriptors of `manifest().labels[i]`. Every label
 * has at least one entry and all descriptors have the manifest's dimension.
 * A default-constructed index is empty and cannot classify.
 */
class ReferenceIndex {
 public:
  ReferenceIndex() = default;
  ReferenceIndex(ModelManifest manifest,
                 std::vector<std::vector<IndexEntry>> entries);

  const ModelManifest& manifest() const noexcept { return manifest_; }
  const std::vector<std::vector<IndexEntry>>& entries() const noexcept {
    return entries_;
  }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t descriptor_count() const noexcept;

  friend bool operator==(const ReferenceIndex&, const ReferenceIndex&) = default;

 private:
  ModelManifest manifest_;
  std::vector<std::vector<IndexEntry>> entries_;
};

/**
 * Builds an index from `training_root/<label>/<image files>`.
 *
 * Labels are the sorted folder names; files within a folder are visited in
 * sorted order, so identical inputs give an identical index. Hidden entries
 * (leading '.') are skipped; every other regular file must decode.
 */
ReferenceIndex build_index(const std::filesystem::path& training_root,
                           const DescriptorParams& params = {},
                           const std::string& name = "guideme-reference",
                           const std::string& version = "1");

/// Index directory layout.
inline constexpr const char* kManifestFileName = "manifest.json";
inline constexpr const char* kDescriptorFileName = "descriptors.tsv";
inline constexpr int kIndexFormatVersion = 1;

void save_index(const ReferenceIndex& index, const std::filesystem::path& dir);
ReferenceIndex load_index(const std::filesystem::path& dir);

/// Serialized forms of the two index files.
std::string manifest_document(const ReferenceIndex& index);
std::string descriptor_table(const ReferenceIndex& index);
ReferenceIndex parse_index(const std::string& manifest_text,
                           const std::string& table_text);

}  // namespace guideme
