// Independent test oracles. Everything here deliberately takes a
// different route than the production code it checks: ray-casting
// point-in-polygon + dense sampling instead of orientation tests,
// brute-force polyline marching instead of the analytic arc walk, value
// iteration instead of temporal-difference learning.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "usv/common/geometry.hpp"
#include "usv/planning/geometry2d.hpp"

namespace usv::test {

// Ray-casting parity test (open-set); boundary handling is fuzzy, which
// is fine for a sampling oracle.
inline bool point_in_polygon_raycast(const Vec2& p, const std::vector<Vec2>& poly) {
  bool inside = false;
  size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    bool crosses = (poly[i].y > p.y) != (poly[j].y > p.y);
    if (!crosses) continue;
    double x_at =
        poly[j].x + (poly[i].x - poly[j].x) * (p.y - poly[j].y) / (poly[i].y - poly[j].y);
    if (p.x < x_at) inside = !inside;
  }
  return inside;
}

// Brute-force segment vs convex polygon: dense point sampling along the
// segment. Can only under-detect grazing contact, never over-detect.
inline bool segment_collides_sampling(const Vec2& p0, const Vec2& p1,
                                      const planning::ConvexPolygon& poly,
                                      double step = 0.02) {
  double len = (p1 - p0).norm();
  int n = std::max(2, static_cast<int>(len / step) + 1);
  for (int i = 0; i <= n; ++i) {
    Vec2 p = p0 + (p1 - p0) * (static_cast<double>(i) / n);
    if (point_in_polygon_raycast(p, poly.vertices)) return true;
  }
  return false;
}

// Minimum distance from a segment to a polygon boundary, sampled; used to
// confirm that oracle/production disagreements only happen at grazing
// contact.
inline double segment_polygon_gap(const Vec2& p0, const Vec2& p1,
                                  const planning::ConvexPolygon& poly, int samples = 400) {
  double best = 1e30;
  size_t n = poly.vertices.size();
  for (int i = 0; i <= samples; ++i) {
    Vec2 p = p0 + (p1 - p0) * (static_cast<double>(i) / samples);
    for (size_t e = 0; e < n; ++e) {
      best = std::min(best,
                      point_segment_distance(p, poly.vertices[e], poly.vertices[(e + 1) % n]));
    }
  }
  return best;
}

// Dense-march pure-pursuit oracle: resample the polyline at `step` arc
// increments, project within [progress, progress + window], walk the
// lookahead along the samples.
struct PolylineWalkOracle {
  std::vector<Vec2> samples;
  std::vector<double> arcs;

  PolylineWalkOracle(const std::vector<Vec2>& wps, double step = 0.001) {
    double arc = 0.0;
    for (size_t i = 0; i + 1 < wps.size(); ++i) {
      Vec2 d = wps[i + 1] - wps[i];
      double len = d.norm();
      if (len <= 0.0) continue;
      int n = std::max(1, static_cast<int>(len / step));
      for (int k = 0; k < n; ++k) {
        double t = static_cast<double>(k) / n;
        samples.push_back(wps[i] + d * t);
        arcs.push_back(arc + t * len);
      }
      arc += len;
    }
    samples.push_back(wps.back());
    arcs.push_back(arc);
  }

  Vec2 target(const Vec2& pose, double progress, double lookahead, double window) const {
    size_t best = samples.size() - 1;
    double best_d = 1e30;
    double best_arc = -1.0;
    for (size_t i = 0; i < samples.size(); ++i) {
      if (arcs[i] < progress) continue;
      if (best_arc >= 0.0 && arcs[i] > best_arc + window) break;
      double d = (samples[i] - pose).norm();
      if (d < best_d) {
        best_d = d;
        best = i;
        best_arc = arcs[i];
      }
    }
    double want = arcs[best] + lookahead;
    for (size_t i = best; i < samples.size(); ++i) {
      if (arcs[i] >= want) return samples[i];
    }
    return samples.back();
  }
};

// Value iteration on a small tabular MDP; the analytic reference for the
// Q-learning convergence check.
struct TabularMDP {
  int n_states = 0;
  int n_actions = 0;
  // next[s][a], reward[s][a], terminal transition flag
  std::vector<std::vector<int>> next;
  std::vector<std::vector<double>> reward;
  std::vector<std::vector<bool>> terminal;
};

inline std::vector<std::array<double, 2>> value_iteration(const TabularMDP& mdp, double gamma,
                                                          int sweeps = 10000) {
  std::vector<std::array<double, 2>> q(mdp.n_states, {0.0, 0.0});
  for (int it = 0; it < sweeps; ++it) {
    double delta = 0.0;
    for (int s = 0; s < mdp.n_states; ++s) {
      for (int a = 0; a < mdp.n_actions; ++a) {
        double target = mdp.reward[s][a];
        if (!mdp.terminal[s][a]) {
          int ns = mdp.next[s][a];
          target += gamma * std::max(q[ns][0], q[ns][1]);
        }
        delta = std::max(delta, std::abs(target - q[s][a]));
        q[s][a] = target;
      }
    }
    if (delta < 1e-14) break;
  }
  return q;
}

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / v.size();
}

inline double stddev_of(const std::vector<double>& v) {
  double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return v.size() > 1 ? std::sqrt(s / (v.size() - 1)) : 0.0;
}

inline double rmse_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return v.empty() ? 0.0 : std::sqrt(s / v.size());
}

}  // namespace usv::test
