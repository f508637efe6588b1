#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "guideme/image.hpp"

namespace guideme {

/// Shape of the reference descriptor and the softmax temperature that goes
/// with it. Stored in the model manifest.
struct DescriptorParams {
  int grid_size = 4;
  int histogram_bins = 8;
  double temperature = 0.05;

  /// grid_size^2 * 3 channel means followed by histogram_bins * 3 masses.
  std::size_t dimension() const noexcept {
    return std::size_t(grid_size) * grid_size * 3 +
           std::size_t(histogram_bins) * 3;
  }

  /// Throws kInvalidArgument unless grid_size >= 1, bins in [1, 256] and
  /// temperature is positive.
  void validate() const;

  friend bool operator==(const DescriptorParams&, const DescriptorParams&) = default;
};

/// L2-normalized image summary used for nearest-neighbor matching.
class ImageDescriptor {
 public:
  ImageDescriptor() = default;
  /// Takes already-normalized values; throws kInvalidArgument if the norm is
  /// not 1 within 1e-9.
  explicit ImageDescriptor(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const ImageDescriptor&, const ImageDescriptor&) = default;

 private:
  std::vector<double> values_;
};

/**
 * Computes the descriptor of an RGB raster.
 *
 * Layout: for each grid cell in row-major order, the R, G and B means in
 * [0, 1] using exact area weighting (cells may cut through pixels), then
 * one mass-normalized intensity histogram per channel (R bins, G bins,
 * B bins) with bin = value * bins / 256. The whole vector is scaled to unit
 * L2 norm.
 *
 * Requires width and height of at least max(4, grid_size).
 */
ImageDescriptor extract_descriptor(const RgbImage& image,
                                   const DescriptorParams& params = {});

double euclidean_distance(const ImageDescriptor& a, const ImageDescriptor& b);

}  // namespace guideme
