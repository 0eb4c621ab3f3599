#include "usv/cli/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace usv::cli {

namespace {

struct Bounds {
  double min_x = 1e30, min_y = 1e30, max_x = -1e30, max_y = -1e30;

  void add(double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string trajectory_svg(const sim::World& world,
                           const std::vector<guidance::TrajectoryRow>& log,
                           const std::vector<Vec2>& waypoints) {
  Bounds b;
  b.add(world.vessel_start.x, world.vessel_start.y);
  for (const auto& r : log) b.add(r.x, r.y);
  for (const auto& w : waypoints) b.add(w.x, w.y);
  for (const auto& o : world.objects) {
    double ext = o.shape == sim::ShapeKind::circle ? o.radius
                                                   : std::max(o.extents.x, o.extents.y);
    b.add(o.center.x - ext, o.center.y - ext);
    b.add(o.center.x + ext, o.center.y + ext);
  }

  double margin = 3.0;
  double w = b.max_x - b.min_x + 2 * margin;
  double h = b.max_y - b.min_y + 2 * margin;
  double scale = 600.0 / std::max(w, h);

  // World y grows up, SVG y grows down.
  auto X = [&](double x) { return (x - b.min_x + margin) * scale; };
  auto Y = [&](double y) { return (b.max_y - y + margin) * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w * scale) +
         "\" height=\"" + fmt(h * scale) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#eef4f8\"/>\n";

  for (const auto& o : world.objects) {
    if (o.shape == sim::ShapeKind::circle) {
      svg += "<circle cx=\"" + fmt(X(o.center.x)) + "\" cy=\"" + fmt(Y(o.center.y)) +
             "\" r=\"" + fmt(o.radius * scale) + "\" fill=\"#c2b280\" stroke=\"#7a6f4d\"/>\n";
    } else {
      svg += "<polygon points=\"";
      for (const Vec2& corner :
           {Vec2{o.extents.x, o.extents.y}, Vec2{-o.extents.x, o.extents.y},
            Vec2{-o.extents.x, -o.extents.y}, Vec2{o.extents.x, -o.extents.y}}) {
        Vec2 p = o.center + corner.rotated(o.yaw);
        svg += fmt(X(p.x)) + "," + fmt(Y(p.y)) + " ";
      }
      svg += "\" fill=\"#c2b280\" stroke=\"#7a6f4d\"/>\n";
    }
  }

  for (const auto& wp : waypoints) {
    svg += "<circle cx=\"" + fmt(X(wp.x)) + "\" cy=\"" + fmt(Y(wp.y)) +
           "\" r=\"4\" fill=\"none\" stroke=\"#d04040\" stroke-width=\"1.5\"/>\n";
  }

  auto polyline = [&](auto getx, auto gety, const char* color) {
    std::string s = "<polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : log) s += fmt(X(getx(r))) + "," + fmt(Y(gety(r))) + " ";
    s += "\"/>\n";
    return s;
  };
  svg += polyline([](const auto& r) { return r.est_x; },
                  [](const auto& r) { return r.est_y; }, "#8fb4d9");
  svg += polyline([](const auto& r) { return r.x; },
                  [](const auto& r) { return r.y; }, "#1a7f37");

  svg += "</svg>\n";
  return svg;
}

void save_trajectory_svg(const sim::World& world,
                         const std::vector<guidance::TrajectoryRow>& log,
                         const std::vector<Vec2>& waypoints, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write svg: " + path);
  f << trajectory_svg(world, log, waypoints);
}

}  // namespace usv::cli
