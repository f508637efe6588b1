#include "guideme/descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "guideme/error.hpp"

namespace guideme {
namespace {

// Overlap of pixel [i, i+1) with cell [k*extent/grid, (k+1)*extent/grid),
// measured in units of 1/grid pixel so the result is an exact integer.
std::int64_t overlap(int i, int k, int extent, int grid) {
  const std::int64_t lo = std::max<std::int64_t>(std::int64_t(i) * grid,
                                                 std::int64_t(k) * extent);
  const std::int64_t hi = std::min<std::int64_t>(std::int64_t(i + 1) * grid,
                                                 std::int64_t(k + 1) * extent);
  return std::max<std::int64_t>(0, hi - lo);
}

}  // namespace

void DescriptorParams::validate() const {
  if (grid_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "grid_size must be >= 1");
  }
  if (histogram_bins < 1 || histogram_bins > 256) {
    throw Error(ErrorCode::kInvalidArgument, "histogram_bins must be in [1, 256]");
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw Error(ErrorCode::kInvalidArgument, "temperature must be positive");
  }
}

ImageDescriptor::ImageDescriptor(std::vector<double> values)
    : values_(std::move(values)) {
  double sq = 0.0;
  for (double v : values_) sq += v * v;
  if (values_.empty() || std::abs(std::sqrt(sq) - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "descriptor is not unit length");
  }
}

ImageDescriptor extract_descriptor(const RgbImage& image,
                                   const DescriptorParams& params) {
  params.validate();
  const int g = params.grid_size;
  const int w = image.width;
  const int h = image.height;
  const int min_side = std::max(4, g);
  if (w < min_side || h < min_side) {
    throw Error(ErrorCode::kInvalidArgument,
                "image too small: " + std::to_string(w) + "x" +
                    std::to_string(h) + ", need at least " +
                    std::to_string(min_side) + "x" + std::to_string(min_side));
  }
  if (image.pixels.size() != std::size_t(w) * h * 3) {
    throw Error(ErrorCode::kInvalidArgument, "raster size does not match dimensions");
  }

  const std::size_t bins = params.histogram_bins;
  std::vector<std::uint64_t> cell_sums(std::size_t(g) * g * 3, 0);
  std::vector<std::uint64_t> counts(bins * 3, 0);

  for (int y = 0; y < h; ++y) {
    // A pixel straddles at most two cells per axis.
    const int ky0 = int(std::int64_t(y) * g / h);
    const int ky1 = std::min(g - 1, int(std::int64_t(y + 1) * g / h));
    for (int x = 0; x < w; ++x) {
      const int kx0 = int(std::int64_t(x) * g / w);
      const int kx1 = std::min(g - 1, int(std::int64_t(x + 1) * g / w));
      for (int c = 0; c < 3; ++c) {
        const std::uint8_t v = image.at(x, y, c);
        counts[std::size_t(c) * bins + std::size_t(v) * bins / 256] += 1;
        for (int ky = ky0; ky <= ky1; ++ky) {
          const std::int64_t wy = overlap(y, ky, h, g);
          if (wy == 0) continue;
          for (int kx = kx0; kx <= kx1; ++kx) {
            const std::int64_t wx = overlap(x, kx, w, g);
            if (wx == 0) continue;
            cell_sums[(std::size_t(ky) * g + kx) * 3 + c] +=
                std::uint64_t(wx * wy) * v;
          }
        }
      }
    }
  }

  std::vector<double> values;
  values.reserve(params.dimension());
  // Each cell covers w*h units of (1/g pixel)^2.
  const double cell_scale = 255.0 * double(w) * double(h);
  for (std::uint64_t s : cell_sums) values.push_back(double(s) / cell_scale);
  const double pixel_count = double(w) * double(h);
  for (std::uint64_t n : counts) values.push_back(double(n) / pixel_count);

  double sq = 0.0;
  for (double v : values) sq += v * v;
  const double norm = std::sqrt(sq);
  if (!(norm > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "degenerate image descriptor");
  }
  for (double& v : values) v /= norm;
  return ImageDescriptor(std::move(values));
}

double euclidean_distance(const ImageDescriptor& a, const ImageDescriptor& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "descriptor length mismatch");
  }
  double sq = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double d = va[i] - vb[i];
    sq += d * d;
  }
  return std::sqrt(sq);
}

}  // namespace guideme
