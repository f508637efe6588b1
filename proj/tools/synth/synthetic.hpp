#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "guideme/image.hpp"

// Desk-scale stand-in for a photo dataset: three classes, each a two-level
// pattern in its own dominant channel, plus per-pixel noise. The classes use
// the same two intensity levels in the same proportions, so an image with no
// spatial or channel structure sits roughly equidistant from all of them.
namespace guideme::synth {

inline const std::array<std::string, 3> kLabels = {"Kaaba", "Maqam Ibrahim", "Zamzam"};

struct DatasetOptions {
  int images_per_class = 40;
  double train_fraction = 0.8;
  int size = 64;
  int noise_amplitude = 24;
  std::uint32_t seed = 2021;
};

struct DatasetLayout {
  std::filesystem::path train;
  std::filesystem::path test;
  std::filesystem::path noise_probe;  // uniform-noise image matching no class
};

RgbImage render_class_image(std::size_t class_id, int size, int noise_amplitude,
                            std::mt19937& rng);
RgbImage render_noise_image(int size, std::mt19937& rng);

/// Writes root/train/<label>/NNN.png, root/test/<label>/NNN.png and
/// root/probe/noise.png. Same options, same pixels.
DatasetLayout write_dataset(const std::filesystem::path& root,
                            const DatasetOptions& options = {});

}  // namespace guideme::synth
