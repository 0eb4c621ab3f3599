#include "usv/perception/flatten.hpp"

#include <cmath>
#include <stdexcept>

namespace usv::perception {

FlatImage flatten(const sim::PointCloud& cloud, const FlattenParams& params) {
  if (cloud.empty()) throw std::invalid_argument("flatten: empty cloud");
  if (params.width < 1 || params.height < 1 || !(params.window > 0.0)) {
    throw std::invalid_argument("flatten: invalid image params");
  }

  FlatImage img;
  img.width = params.width;
  img.height = params.height;
  img.meters_per_pixel = params.meters_per_pixel();
  for (auto& ch : img.channels) ch.assign(img.pixel_count(), 0.0f);

  double half = 0.5 * params.window;
  double mpp = img.meters_per_pixel;

  std::array<std::vector<int>, 3> counts;
  for (auto& c : counts) c.assign(img.pixel_count(), 0);

  auto bin = [&](int ch, double u, double v) {
    // u grows with the column, v with distance from the top row.
    int col = static_cast<int>(std::floor((u + half) / mpp));
    int row = static_cast<int>(std::floor((half - v) / mpp));
    if (col < 0 || col >= img.width || row < 0 || row >= img.height) return false;
    ++counts[ch][row * img.width + col];
    return true;
  };

  bool any = false;
  for (const auto& p : cloud.points) {
    bool in = false;
    in |= bin(0, p.x, p.y);
    in |= bin(1, p.y, p.z);
    in |= bin(2, p.x, p.z);
    any |= in;
  }
  img.empty = !any;

  for (int ch = 0; ch < 3; ++ch) {
    int max_count = 0;
    for (int c : counts[ch]) max_count = std::max(max_count, c);
    if (max_count == 0) continue;
    for (size_t i = 0; i < img.pixel_count(); ++i) {
      img.channels[ch][i] = static_cast<float>(counts[ch][i]) / max_count;
    }
  }
  return img;
}

double image_difference(const FlatImage& a, const FlatImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw std::invalid_argument("image_difference: size mismatch");
  }
  double sum = 0.0;
  size_t support = 0;
  for (int ch = 0; ch < 3; ++ch) {
    for (size_t i = 0; i < a.pixel_count(); ++i) {
      float va = a.channels[ch][i], vb = b.channels[ch][i];
      if (va == 0.0f && vb == 0.0f) continue;
      sum += std::abs(va - vb);
      ++support;
    }
  }
  return support == 0 ? 0.0 : sum / static_cast<double>(support);
}

double image_distance(const FlatImage& a, const FlatImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw std::invalid_argument("image_distance: size mismatch");
  }
  double sum = 0.0;
  for (int ch = 0; ch < 3; ++ch) {
    for (size_t i = 0; i < a.pixel_count(); ++i) {
      double d = static_cast<double>(a.channels[ch][i]) - b.channels[ch][i];
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

}  // namespace usv::perception
