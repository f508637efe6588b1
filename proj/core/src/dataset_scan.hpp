#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace guideme::detail {

struct LabelFolder {
  std::string label;
  std::vector<std::filesystem::path> files;  // sorted
};

/// Lists `root/<label>/*` sorted by label then file name, skipping hidden
/// entries. Throws kNotFound if root is not a directory.
std::vector<LabelFolder> scan_label_folders(const std::filesystem::path& root);

}  // namespace guideme::detail
