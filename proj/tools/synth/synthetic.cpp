#include "synthetic.hpp"

#include <algorithm>
#include <cstdio>

#include "guideme/error.hpp"

namespace guideme::synth {
namespace {

// Uniform integer in [lo, hi] straight from the engine; std distributions are
// not reproducible across standard libraries.
int uniform(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

std::uint8_t clamp_byte(int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

bool is_bright(std::size_t class_id, int x, int y, int split_x, int split_y) {
  switch (class_id) {
    case 0: return y < split_y;                       // top band
    case 1: return x < split_x;                       // left band
    default: return (x < split_x) != (y < split_y);   // off-diagonal quadrants
  }
}

}  // namespace

RgbImage render_class_image(std::size_t class_id, int size, int noise_amplitude,
                            std::mt19937& rng) {
  if (class_id >= kLabels.size() || size < 8) {
    throw Error(ErrorCode::kInvalidArgument, "bad synthetic class request");
  }
  const int jitter = std::max(1, size / 16);
  const int split_x = size / 2 + uniform(rng, -jitter, jitter);
  const int split_y = size / 2 + uniform(rng, -jitter, jitter);
  const int bright = uniform(rng, 185, 215);
  const int dark = uniform(rng, 30, 50);
  const int channel = static_cast<int>(class_id);

  RgbImage img(size, size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const bool lit = is_bright(class_id, x, y, split_x, split_y);
      for (int c = 0; c < 3; ++c) {
        const int base = (lit && c == channel) ? bright : dark;
        img.at(x, y, c) = clamp_byte(base + uniform(rng, -noise_amplitude, noise_amplitude));
      }
    }
  }
  return img;
}

RgbImage render_noise_image(int size, std::mt19937& rng) {
  RgbImage img(size, size);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng() & 0xFFu);
  return img;
}

DatasetLayout write_dataset(const std::filesystem::path& root,
                            const DatasetOptions& options) {
  namespace fs = std::filesystem;
  if (options.images_per_class < 2 || options.train_fraction <= 0.0 ||
      options.train_fraction >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "bad dataset options");
  }
  DatasetLayout layout{root / "train", root / "test", root / "probe" / "noise.png"};
  std::mt19937 rng(options.seed);
  const int train_count = std::clamp(
      static_cast<int>(options.images_per_class * options.train_fraction + 0.5), 1,
      options.images_per_class - 1);
  for (std::size_t k = 0; k < kLabels.size(); ++k) {
    fs::create_directories(layout.train / kLabels[k]);
    fs::create_directories(layout.test / kLabels[k]);
    for (int i = 0; i < options.images_per_class; ++i) {
      const auto img = render_class_image(k, options.size, options.noise_amplitude, rng);
      char name[16];
      std::snprintf(name, sizeof(name), "%03d.png", i);
      const auto& dir = i < train_count ? layout.train : layout.test;
      write_file_bytes(dir / kLabels[k] / name, encode_png(img));
    }
  }
  fs::create_directories(layout.noise_probe.parent_path());
  write_file_bytes(layout.noise_probe, encode_png(render_noise_image(options.size, rng)));
  return layout;
}

}  // namespace guideme::synth
