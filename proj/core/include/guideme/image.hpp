#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace guideme {

/// 8-bit RGB raster, row-major with interleaved channels.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), pixels(std::size_t(w) * h * 3) {}

  std::uint8_t& at(int x, int y, int c) {
    return pixels[(std::size_t(y) * width + x) * 3 + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return pixels[(std::size_t(y) * width + x) * 3 + c];
  }
};

enum class ImageFormat { kUnknown, kPng, kJpeg };

/// Sniffs the container format from the leading magic bytes.
ImageFormat detect_format(std::span<const std::uint8_t> bytes);

/// Decodes PNG or JPEG bytes. Anything else is ErrorCode::kDecodeError.
RgbImage decode_image(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_png(const RgbImage& image);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes);

}  // namespace guideme
