// Plain-text XYZ cloud exchange: one "x y z" triple per line.
#pragma once

#include <string>

#include "usv/sim/types.hpp"

namespace usv {

std::string cloud_to_xyz(const sim::PointCloud& cloud);
void save_xyz(const sim::PointCloud& cloud, const std::string& path);
sim::PointCloud load_xyz(const std::string& path);

}  // namespace usv
