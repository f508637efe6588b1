#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// code paths: the distance oracle uses the spherical law of cosines in long
// double, the descriptor oracle replicates pixels so grid cells fall on whole
// pixels, and the classifier oracle takes a plain unshifted softmax.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "guideme/image.hpp"

namespace guideme::testing {

inline constexpr long double kOracleRadius = 6371000.0L;

inline long double law_of_cosines_m(double lat1, double lon1, double lat2, double lon2) {
  const long double r = std::numbers::pi_v<long double> / 180.0L;
  const long double p1 = lat1 * r;
  const long double p2 = lat2 * r;
  const long double dl = (static_cast<long double>(lon2) - lon1) * r;
  long double cos_c = std::sin(p1) * std::sin(p2) + std::cos(p1) * std::cos(p2) * std::cos(dl);
  if (cos_c > 1.0L) cos_c = 1.0L;
  if (cos_c < -1.0L) cos_c = -1.0L;
  return kOracleRadius * std::acos(cos_c);
}

/// Degrees of latitude spanning `meters` along a meridian.
inline double meridian_offset_deg(double meters) {
  return meters / (6371000.0 * std::numbers::pi / 180.0);
}

inline std::vector<double> brute_descriptor(const RgbImage& img, int grid, int bins) {
  // Upscale by `grid` in both axes: cell (gx, gy) is then exactly the block
  // [gx*W, (gx+1)*W) x [gy*H, (gy+1)*H) of the enlarged image.
  const int W = img.width;
  const int H = img.height;
  std::vector<double> v;
  for (int gy = 0; gy < grid; ++gy) {
    for (int gx = 0; gx < grid; ++gx) {
      for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int yy = gy * H; yy < (gy + 1) * H; ++yy) {
          for (int xx = gx * W; xx < (gx + 1) * W; ++xx) {
            sum += img.at(xx / grid, yy / grid, c);
          }
        }
        v.push_back(sum / (double(W) * H) / 255.0);
      }
    }
  }
  for (int c = 0; c < 3; ++c) {
    std::vector<double> hist(bins, 0.0);
    for (int y = 0; y < H; ++y) {
      for (int x = 0; x < W; ++x) {
        const double pos = std::floor(img.at(x, y, c) / 256.0 * bins);
        hist[static_cast<std::size_t>(pos)] += 1.0;
      }
    }
    for (double h : hist) v.push_back(h / (double(W) * H));
  }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

struct OracleScore {
  std::string label;
  double confidence;
};

/// Unshifted softmax of -min_distance / tau per label.
inline std::vector<OracleScore> brute_classify(
    const std::vector<double>& query, const std::vector<std::string>& labels,
    const std::vector<std::vector<std::vector<double>>>& refs, double tau) {
  std::vector<double> w;
  double total = 0.0;
  for (const auto& group : refs) {
    double best = INFINITY;
    for (const auto& r : group) {
      double sq = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) sq += (r[i] - query[i]) * (r[i] - query[i]);
      best = std::min(best, std::sqrt(sq));
    }
    w.push_back(std::exp(-best / tau));
    total += w.back();
  }
  std::vector<OracleScore> out;
  for (std::size_t i = 0; i < labels.size(); ++i) out.push_back({labels[i], w[i] / total});
  return out;
}

}  // namespace guideme::testing
