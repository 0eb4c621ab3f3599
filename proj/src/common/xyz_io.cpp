#include "usv/common/xyz_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace usv {

std::string cloud_to_xyz(const sim::PointCloud& cloud) {
  std::string out;
  char buf[128];
  for (const auto& p : cloud.points) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f\n", p.x, p.y, p.z);
    out += buf;
  }
  return out;
}

void save_xyz(const sim::PointCloud& cloud, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write xyz: " + path);
  f << cloud_to_xyz(cloud);
}

sim::PointCloud load_xyz(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open xyz: " + path);

  sim::PointCloud cloud;
  std::string line;
  size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    Vec3 p;
    if (!(ss >> p.x >> p.y >> p.z) || !finite(p)) {
      throw std::runtime_error("bad xyz line " + std::to_string(lineno) + " in " + path);
    }
    cloud.points.push_back(p);
  }
  return cloud;
}

}  // namespace usv
