#pragma once

#include <optional>
#include <span>
#include <vector>

// Planar primitives: convex hulls of finite point sets, diameter pairs,
// minimum-width strips and flatness measurements used everywhere else.
// All inputs are plain doubles; predicates take an absolute tolerance that
// callers scale by the extent of their data.

namespace maxdist {

inline constexpr double kEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }
// Lexicographic (x, then y); used for deterministic tie-breaking.
inline bool operator<(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, const Point& a) { return {s * a.x, s * a.y}; }

double dot(const Point& a, const Point& b);
double cross(const Point& a, const Point& b);
double norm(const Point& a);
double dist(const Point& a, const Point& b);

struct Segment {
  Point p;
  Point q;
  double length() const;
  Point midpoint() const;
};

// Convex hull as counter-clockwise extreme vertices only.
// rank 0: one vertex (a point), rank 1: two vertices (a segment),
// rank 2: >= 3 vertices, strictly convex up to the collinearity tolerance.
struct Hull {
  std::vector<Point> vertices;
  int rank() const {
    if (vertices.size() <= 1) return 0;
    return vertices.size() == 2 ? 1 : 2;
  }
};

struct DiameterInfo {
  Point a;
  Point b;
  double length = 0.0;
  Segment segment() const { return {a, b}; }
};

// A strip is a center line (anchor + direction) plus its full width,
// i.e. twice the supremum distance from the fitted points to the line.
struct StripFit {
  Point direction{1.0, 0.0};  // unit vector along the strip
  Point anchor{0.0, 0.0};     // a point on the center line
  double width = 0.0;
};

// Throws std::invalid_argument("empty point set") on empty input.
// Collinearity uses |cross| <= eps * scale^2 with scale = bounding box diagonal.
Hull convex_hull(std::span<const Point> pts, double eps = kEps);

// Farthest vertex pair; exact max over vertex pairs, ties broken by the
// lexicographically smallest ordered (a, b).
DiameterInfo diameter_pair(const Hull& hull);

// Minimum-width strip over the point set. The optimal direction is parallel
// to some hull edge; degenerate inputs give width 0 with the direction along
// the segment (or (1,0) for a single point).
StripFit min_width_strip(std::span<const Point> pts, double eps = kEps);

double dist_point_line(const Point& p, const Point& anchor, const Point& direction);
double dist_point_segment(const Point& p, const Segment& s);
double dist_segment_segment(const Segment& a, const Segment& b);

double hull_area(const Hull& hull);

// Parameter t of the orthogonal projection of p onto the line through s,
// with t = 0 at s.p and t = 1 at s.q. Throws std::invalid_argument
// ("projection undefined") when s is degenerate.
double project_onto_segment_line(const Point& p, const Segment& s);

// Flatness of a hull relative to its own diameter segments: the supremum
// distance from the hull to a diameter segment, maximized over all pairs
// realizing the diameter within `tie_eps`, divided by the diameter.
// Dimensionless, in [0, sqrt(3)/2]; 0 for rank <= 1.
double hull_beta_hat(const Hull& hull, double tie_eps = kEps);
// Same supremum without the division by the diameter.
double hull_beta_hat_abs(const Hull& hull, double tie_eps = kEps);

// Boundary as segments: rank 2 gives the polygon edges, rank 1 the segment
// itself, rank 0 nothing.
std::vector<Segment> hull_boundary(const Hull& hull);

// Closed-hull membership with absolute slack `tol` on the distance to the hull.
bool hull_contains(const Hull& hull, const Point& p, double tol = 0.0);

// Intersection of the line (anchor + t*direction) with the hull; nullopt when
// the line misses it. May be degenerate (touching point).
std::optional<Segment> clip_line_to_hull(const Point& anchor, const Point& direction,
                                         const Hull& hull);

}  // namespace maxdist
