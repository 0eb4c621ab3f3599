// Convex polygon primitives used by the obstacle manager and planner.
#pragma once

#include <optional>
#include <vector>

#include "usv/common/geometry.hpp"

namespace usv::planning {

// Convex, counterclockwise polygon.
struct ConvexPolygon {
  std::vector<Vec2> vertices;

  bool valid() const { return vertices.size() >= 3; }
  Vec2 centroid() const;
  double area() const;  // shoelace, >= 0 for CCW
};

// Andrew monotone chain; returns CCW hull (collinear points dropped).
ConvexPolygon convex_hull(std::vector<Vec2> points);

// Closed-set membership: boundary counts as inside.
bool point_in_polygon(const Vec2& p, const ConvexPolygon& poly);

// Distance from a point to the polygon, 0 when inside.
double distance_to_polygon(const Vec2& p, const ConvexPolygon& poly);

// Exact segment vs convex polygon test, containment included. Touching a
// vertex or edge counts as a collision (closed convention).
bool segment_collides(const Vec2& p0, const Vec2& p1, const ConvexPolygon& poly);

// Parametric clip of segment [p0, p1] against the polygon interior.
// Returns the (t_enter, t_exit) overlap in [0, 1], or nullopt when the
// segment misses.
std::optional<std::pair<double, double>> clip_segment(const Vec2& p0, const Vec2& p1,
                                                      const ConvexPolygon& poly);

// Regular n-gon circumscribed about the circle (contains it entirely).
ConvexPolygon circumscribed_polygon(const Vec2& center, double radius, int sides);

}  // namespace usv::planning
