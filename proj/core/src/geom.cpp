#include "maxdist/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace maxdist {

double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
double norm(const Point& a) { return std::hypot(a.x, a.y); }
double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double Segment::length() const { return dist(p, q); }
Point Segment::midpoint() const { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

namespace {

double bbox_diag(std::span<const Point> pts) {
  double lx = pts[0].x, hx = pts[0].x, ly = pts[0].y, hy = pts[0].y;
  for (const Point& p : pts) {
    lx = std::min(lx, p.x);
    hx = std::max(hx, p.x);
    ly = std::min(ly, p.y);
    hy = std::max(hy, p.y);
  }
  return std::hypot(hx - lx, hy - ly);
}

}  // namespace

Hull convex_hull(std::span<const Point> pts, double eps) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  std::vector<Point> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const std::size_t n = p.size();
  if (n <= 2) return Hull{std::move(p)};

  // Cross products below this are treated as collinear, so near-flat corners
  // are dropped and only genuinely extreme vertices survive.
  const double diag = bbox_diag(p);
  const double area_eps = eps * diag * diag;

  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= area_eps) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= area_eps) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return Hull{std::move(h)};
}

DiameterInfo diameter_pair(const Hull& hull) {
  const auto& v = hull.vertices;
  if (v.empty()) throw std::invalid_argument("empty point set");
  DiameterInfo best{v[0], v[0], 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Point a = std::min(v[i], v[j]);
      Point b = std::max(v[i], v[j]);
      const double d = dist(a, b);
      const bool better =
          d > best.length ||
          (d == best.length && (a < best.a || (a == best.a && b < best.b)));
      if (better) best = {a, b, d};
    }
  }
  return best;
}

StripFit min_width_strip(std::span<const Point> pts, double eps) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  Hull hull = convex_hull(pts, eps);
  const auto& v = hull.vertices;
  if (hull.rank() == 0) return StripFit{{1.0, 0.0}, v[0], 0.0};
  if (hull.rank() == 1) {
    Point d = v[1] - v[0];
    double len = norm(d);
    return StripFit{{d.x / len, d.y / len}, v[0], 0.0};
  }
  // The minimum-width direction is parallel to some hull edge; try each one
  // and keep the narrowest strip (first minimal edge wins, deterministically).
  StripFit best;
  double best_width = std::numeric_limits<double>::infinity();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point e = v[(i + 1) % n] - v[i];
    const double len = norm(e);
    if (len == 0.0) continue;
    Point dir{e.x / len, e.y / len};
    Point nrm{-dir.y, dir.x};
    double lo = dot(v[0], nrm), hi = lo;
    for (const Point& p : v) {
      const double o = dot(p, nrm);
      lo = std::min(lo, o);
      hi = std::max(hi, o);
    }
    const double w = hi - lo;
    if (w < best_width) {
      best_width = w;
      const double mid = 0.5 * (lo + hi);
      best = StripFit{dir, {mid * nrm.x, mid * nrm.y}, w};
    }
  }
  return best;
}

double dist_point_line(const Point& p, const Point& anchor, const Point& direction) {
  const double len = norm(direction);
  if (len == 0.0) return dist(p, anchor);
  return std::abs(cross(direction, p - anchor)) / len;
}

double dist_point_segment(const Point& p, const Segment& s) {
  const Point d = s.q - s.p;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return dist(p, s.p);
  double t = dot(p - s.p, d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, s.p + t * d);
}

namespace {

int orient_sign(const Point& a, const Point& b, const Point& c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool segments_properly_cross(const Segment& a, const Segment& b) {
  const int o1 = orient_sign(a.p, a.q, b.p);
  const int o2 = orient_sign(a.p, a.q, b.q);
  const int o3 = orient_sign(b.p, b.q, a.p);
  const int o4 = orient_sign(b.p, b.q, a.q);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

double dist_segment_segment(const Segment& a, const Segment& b) {
  if (segments_properly_cross(a, b)) return 0.0;
  double m = dist_point_segment(a.p, b);
  m = std::min(m, dist_point_segment(a.q, b));
  m = std::min(m, dist_point_segment(b.p, a));
  m = std::min(m, dist_point_segment(b.q, a));
  return m;
}

double hull_area(const Hull& hull) {
  const auto& v = hull.vertices;
  if (v.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    s += cross(a, b);
  }
  return 0.5 * std::abs(s);
}

double project_onto_segment_line(const Point& p, const Segment& s) {
  const Point d = s.q - s.p;
  const double len2 = dot(d, d);
  if (len2 == 0.0) throw std::invalid_argument("projection undefined");
  return dot(p - s.p, d) / len2;
}

double hull_beta_hat_abs(const Hull& hull, double tie_eps) {
  const auto& v = hull.vertices;
  if (hull.rank() <= 1) return 0.0;
  const double diam = diameter_pair(hull).length;
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (dist(v[i], v[j]) < diam - tie_eps) continue;
      const Segment seg{v[i], v[j]};
      double sup = 0.0;
      for (const Point& y : v) sup = std::max(sup, dist_point_segment(y, seg));
      worst = std::max(worst, sup);
    }
  }
  return worst;
}

double hull_beta_hat(const Hull& hull, double tie_eps) {
  if (hull.rank() <= 1) return 0.0;
  const double diam = diameter_pair(hull).length;
  return hull_beta_hat_abs(hull, tie_eps) / diam;
}

std::vector<Segment> hull_boundary(const Hull& hull) {
  const auto& v = hull.vertices;
  std::vector<Segment> out;
  if (hull.rank() == 0) return out;
  if (hull.rank() == 1) {
    out.push_back({v[0], v[1]});
    return out;
  }
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back({v[i], v[(i + 1) % v.size()]});
  return out;
}

bool hull_contains(const Hull& hull, const Point& p, double tol) {
  const auto& v = hull.vertices;
  if (v.empty()) return false;
  if (hull.rank() == 0) return dist(p, v[0]) <= tol;
  if (hull.rank() == 1) return dist_point_segment(p, {v[0], v[1]}) <= tol;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % v.size()];
    const Point e = b - a;
    // signed distance to the edge line, positive inside a CCW polygon
    const double sd = cross(e, p - a) / norm(e);
    if (sd < -tol) return false;
  }
  return true;
}

std::optional<Segment> clip_line_to_hull(const Point& anchor, const Point& direction,
                                         const Hull& hull) {
  const auto& v = hull.vertices;
  const double dlen = norm(direction);
  if (v.empty() || dlen == 0.0) return std::nullopt;
  if (hull.rank() == 0) {
    if (dist_point_line(v[0], anchor, direction) == 0.0) return Segment{v[0], v[0]};
    return std::nullopt;
  }
  if (hull.rank() == 1) {
    // Line vs segment: collinear gives the whole segment, otherwise a point.
    const Point e = v[1] - v[0];
    const double denom = cross(direction, e);
    if (denom == 0.0) {
      if (dist_point_line(v[0], anchor, direction) == 0.0) return Segment{v[0], v[1]};
      return std::nullopt;
    }
    const double s = cross(direction, anchor - v[0]) / denom;
    if (s < 0.0 || s > 1.0) return std::nullopt;
    const Point hit = v[0] + s * e;
    return Segment{hit, hit};
  }
  // Cyrus-Beck against the CCW polygon: keep the parameter interval of the
  // line inside every edge half-plane.
  double tmin = -std::numeric_limits<double>::infinity();
  double tmax = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % v.size()];
    const Point e = b - a;
    const Point out_nrm{e.y, -e.x};  // outward for CCW
    const double denom = dot(direction, out_nrm);
    const double num = dot(anchor - a, out_nrm);
    if (denom == 0.0) {
      if (num > 0.0) return std::nullopt;  // parallel and outside
      continue;
    }
    const double t = -num / denom;
    if (denom < 0.0) {
      tmin = std::max(tmin, t);
    } else {
      tmax = std::min(tmax, t);
    }
  }
  if (tmin > tmax) return std::nullopt;
  return Segment{anchor + tmin * direction, anchor + tmax * direction};
}

}  // namespace maxdist
