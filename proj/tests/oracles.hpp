#pragma once

// Independent brute-force references the tests compare the library against.
// Deliberately dumb and quadratic-or-worse; shares no code with the library
// beyond the data types and the dyadic membership predicates.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "maxdist/multiscale.hpp"

namespace oracle {

using maxdist::DyadicCube;
using maxdist::Point;
using maxdist::PointSet;
using maxdist::Region;

inline double diameter(std::span<const Point> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
  return best;
}

// Minimal strip width over the set. The optimal strip direction is parallel
// to a line through two of the points, so sweeping all pairs is exact.
inline double width(std::span<const Point> pts) {
  if (pts.size() < 2) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
      const double len = std::hypot(dx, dy);
      if (len == 0.0) continue;
      const double nx = -dy / len, ny = dx / len;  // unit normal
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (const Point& p : pts) {
        const double s = nx * p.x + ny * p.y;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      best = std::min(best, hi - lo);
    }
  }
  return std::isfinite(best) ? best : 0.0;  // all points coincide
}

inline double cross3(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c,
                              double eps) {
  const double d1 = cross3(a, b, p), d2 = cross3(b, c, p), d3 = cross3(c, a, p);
  const bool has_neg = d1 < -eps || d2 < -eps || d3 < -eps;
  const bool has_pos = d1 > eps || d2 > eps || d3 > eps;
  return !(has_neg && has_pos);
}

inline bool on_segment(const Point& p, const Point& a, const Point& b, double eps) {
  if (std::abs(cross3(a, b, p)) > eps) return false;
  const double t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return t >= -eps && t <= len2 + eps;
}

// Caratheodory: p lies in the convex hull of `others` iff it lies in some
// triangle (or on some segment) spanned by them.
inline bool in_hull_of(const Point& p, std::span<const Point> others, double eps) {
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (others[i] == p) return true;
    for (std::size_t j = i + 1; j < others.size(); ++j) {
      if (on_segment(p, others[i], others[j], eps)) return true;
      for (std::size_t k = j + 1; k < others.size(); ++k)
        if (point_in_triangle(p, others[i], others[j], others[k], eps)) return true;
    }
  }
  return false;
}

inline std::vector<Point> gather(const PointSet& e, const DyadicCube& q, Region region) {
  std::vector<Point> got;
  for (const Point& p : e.points())
    if (region == Region::kQ ? q.contains(p) : q.triple_contains(p)) got.push_back(p);
  return got;
}

// r_E of a cube region: half the brute-force strip width of the gathered points.
inline double region_half_width(const PointSet& e, const DyadicCube& q, Region region) {
  const std::vector<Point> got = gather(e, q, region);
  return width(got) / 2.0;
}

// One scale of the truncated square sum by full grid enumeration over the
// padded bounding box of E. r = 0 gives the classical beta^2 |Q| terms.
inline double scale_partial(const PointSet& e, int n, double r, Region region) {
  double lo_x = e[0].x, lo_y = e[0].y, hi_x = e[0].x, hi_y = e[0].y;
  for (const Point& p : e.points()) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  const double side = std::ldexp(1.0, -n);
  const auto lo_k = static_cast<std::int64_t>(std::floor(lo_x / side)) - 2;
  const auto hi_k = static_cast<std::int64_t>(std::floor(hi_x / side)) + 2;
  const auto lo_j = static_cast<std::int64_t>(std::floor(lo_y / side)) - 2;
  const auto hi_j = static_cast<std::int64_t>(std::floor(hi_y / side)) + 2;
  double total = 0.0;
  for (std::int64_t k = lo_k; k <= hi_k; ++k) {
    for (std::int64_t j = lo_j; j <= hi_j; ++j) {
      const DyadicCube q{n, k, j};
      const std::vector<Point> got = gather(e, q, region);
      if (got.empty()) continue;
      const double rv = width(got) / 2.0;
      const double rd = maxdist::region_diam(q, region);
      const double excess = rv / rd - (r > 0.0 ? r / rd : 0.0);
      if (excess <= 0.0) continue;
      total += excess * excess * q.diam();
    }
  }
  return total;
}

}  // namespace oracle
