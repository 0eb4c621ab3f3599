// The flattened pointcloud: X-Y, Y-Z and X-Z occupancy projections of an
// object-frame cloud packed into the three channels of one image.
#pragma once

#include <array>
#include <vector>

#include "usv/sim/types.hpp"

namespace usv::perception {

struct FlattenParams {
  int width = 32;
  int height = 32;
  double window = 8.0;  // m, full physical extent of the image, centered at the origin

  double meters_per_pixel() const { return window / width; }
};

struct FlatImage {
  int width = 0;
  int height = 0;
  double meters_per_pixel = 0.0;
  // channels[0]=X-Y, [1]=Y-Z, [2]=X-Z; row-major, values in [0, 1].
  std::array<std::vector<float>, 3> channels;
  bool empty = false;  // no point landed inside the window

  float at(int ch, int row, int col) const { return channels[ch][row * width + col]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Bin each point into the three projections and normalize every channel
// to [0, 1] by its max bin count.
FlatImage flatten(const sim::PointCloud& cloud_object_frame, const FlattenParams& params);

// Mean absolute channel difference over the union of the two supports
// (pixels non-zero in either image). Zero for identical images.
double image_difference(const FlatImage& a, const FlatImage& b);

// Euclidean distance over all pixels and channels.
double image_distance(const FlatImage& a, const FlatImage& b);

}  // namespace usv::perception
