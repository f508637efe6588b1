#include "dataset_scan.hpp"

#include <algorithm>

#include "guideme/error.hpp"

namespace guideme::detail {

namespace fs = std::filesystem;

std::vector<LabelFolder> scan_label_folders(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kNotFound, "not a directory: " + root.string());
  }
  std::vector<LabelFolder> out;
  for (const auto& dir : fs::directory_iterator(root)) {
    const std::string label = dir.path().filename().string();
    if (!dir.is_directory() || label.starts_with('.')) continue;
    LabelFolder folder{label, {}};
    for (const auto& file : fs::directory_iterator(dir.path())) {
      if (!file.is_regular_file()) continue;
      if (file.path().filename().string().starts_with('.')) continue;
      folder.files.push_back(file.path());
    }
    std::sort(folder.files.begin(), folder.files.end());
    out.push_back(std::move(folder));
  }
  std::sort(out.begin(), out.end(),
            [](const LabelFolder& a, const LabelFolder& b) { return a.label < b.label; });
  return out;
}

}  // namespace guideme::detail
