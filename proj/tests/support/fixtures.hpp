#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "guideme/catalog.hpp"
#include "guideme/reference_index.hpp"
#include "synthetic.hpp"

namespace guideme::testing {

inline std::filesystem::path source_dir() { return GUIDEME_SOURCE_DIR; }
inline std::filesystem::path shipped_catalog() { return source_dir() / "data" / "catalog.json"; }
inline std::filesystem::path shipped_index() { return source_dir() / "data" / "index"; }
inline std::filesystem::path sample(const std::string& name) {
  return source_dir() / "data" / "samples" / name;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("guideme-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& p) const { return path_ / p; }

 private:
  std::filesystem::path path_;
};

/// The default synthetic dataset, generated once per test process.
struct SyntheticFixture {
  TempDir dir;
  synth::DatasetLayout layout;
  ReferenceIndex index;

  static const SyntheticFixture& get() {
    static const SyntheticFixture fixture;
    return fixture;
  }

 private:
  SyntheticFixture()
      : layout(synth::write_dataset(dir.path())), index(build_index(layout.train)) {}
};

}  // namespace guideme::testing
