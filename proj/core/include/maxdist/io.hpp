#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "maxdist/certify.hpp"
#include "maxdist/json_value.hpp"

// Point-set ingestion, sample-set generators, the opt-in normalization
// transform, and JSON serialization of curves, sums, and reports.

namespace maxdist {

// CSV: one "x,y" pair per line; '#' starts a comment; blank lines skipped.
// Malformed lines raise std::runtime_error naming the line number. Exact
// duplicates are dropped by PointSet (see duplicates_removed()).
PointSet parse_points(std::istream& in);
PointSet parse_points_file(const std::string& path);
void write_points_csv(std::ostream& out, std::span<const Point> pts);

// Deterministic sample sets, all within the unit square.
std::vector<Point> gen_koch(int level);                            // 4^level + 1 vertices, diameter 1
std::vector<Point> gen_cantor_dust(int level);                     // 4^level corners, ratio 1/4
std::vector<Point> gen_circle(int n);                              // center (1/2,1/2), radius 1/2
std::vector<Point> gen_random_uniform(int n, std::uint64_t seed);  // iid uniform in [0,1)^2
std::vector<Point> gen_grid(int n);                                // n x n lattice (i/n, j/n)

struct Transform {
  double scale = 1.0;  // applies to coordinates and to r alike
  Point shift{0.0, 0.0};
  Point apply(const Point& p) const { return {scale * p.x + shift.x, scale * p.y + shift.y}; }
};

// Identity when the bounding box already lies inside the unit square;
// otherwise a similarity centering it in [1/16, 15/16]^2 (pure translation
// to (1/2, 1/2) for a single point). The dyadic grid itself never moves.
Transform normalize_transform(const PointSet& e);
PointSet apply_transform(const PointSet& e, const Transform& t);

// Curve files carry the radius they were built for so they can be
// re-checked later. curve_from_json throws std::runtime_error on malformed
// input or an unknown schema version.
JsonValue curve_to_json(const Curve& curve, double r);
Curve curve_from_json(std::istream& in, double* r = nullptr);

JsonValue sum_to_json(const SumReport& sum);
JsonValue report_to_json(const BoundsReport& rep);

const char* region_name(Region region);  // "q" / "3q"

}  // namespace maxdist
