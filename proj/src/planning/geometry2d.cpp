#include "usv/planning/geometry2d.hpp"

#include <algorithm>

namespace usv::planning {

Vec2 ConvexPolygon::centroid() const {
  Vec2 c;
  if (vertices.empty()) return c;
  for (const auto& v : vertices) c = c + v;
  return c / static_cast<double>(vertices.size());
}

double ConvexPolygon::area() const {
  double a = 0.0;
  size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = vertices[i];
    const Vec2& q = vertices[(i + 1) % n];
    a += p.cross(q);
  }
  return 0.5 * a;
}

ConvexPolygon convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  size_t n = pts.size();
  if (n < 3) return ConvexPolygon{pts};

  std::vector<Vec2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return ConvexPolygon{hull};
}

bool point_in_polygon(const Vec2& p, const ConvexPolygon& poly) {
  size_t n = poly.vertices.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = poly.vertices[i];
    const Vec2& b = poly.vertices[(i + 1) % n];
    if ((b - a).cross(p - a) < 0.0) return false;  // right of a CCW edge
  }
  return true;
}

double distance_to_polygon(const Vec2& p, const ConvexPolygon& poly) {
  if (point_in_polygon(p, poly)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    best = std::min(best,
                    point_segment_distance(p, poly.vertices[i], poly.vertices[(i + 1) % n]));
  }
  return best;
}

namespace {

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  double v = (b - a).cross(c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Inclusive segment-segment intersection (touching counts).
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool segment_collides(const Vec2& p0, const Vec2& p1, const ConvexPolygon& poly) {
  if (!poly.valid()) return false;
  if (point_in_polygon(p0, poly) || point_in_polygon(p1, poly)) return true;
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    if (segments_intersect(p0, p1, poly.vertices[i], poly.vertices[(i + 1) % n])) return true;
  }
  return false;
}

std::optional<std::pair<double, double>> clip_segment(const Vec2& p0, const Vec2& p1,
                                                      const ConvexPolygon& poly) {
  if (!poly.valid()) return std::nullopt;
  double t0 = 0.0, t1 = 1.0;
  Vec2 d = p1 - p0;
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = poly.vertices[i];
    Vec2 edge = poly.vertices[(i + 1) % n] - a;
    Vec2 inward = edge.perp_left();  // interior is left of CCW edges
    double denom = inward.dot(d);
    double num = inward.dot(a - p0);
    if (std::abs(denom) < 1e-15) {
      if (num < 0.0) return std::nullopt;  // parallel and outside
      continue;
    }
    double t = num / denom;
    if (denom > 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(t0, t1);
}

ConvexPolygon circumscribed_polygon(const Vec2& center, double radius, int sides) {
  ConvexPolygon poly;
  double rc = radius / std::cos(kPi / sides);
  for (int i = 0; i < sides; ++i) {
    double a = 2.0 * kPi * i / sides;
    poly.vertices.push_back(center + Vec2{rc * std::cos(a), rc * std::sin(a)});
  }
  return poly;
}

}  // namespace usv::planning
