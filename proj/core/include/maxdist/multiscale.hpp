#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "maxdist/geom.hpp"

// Dyadic grid machinery: beta numbers of cubes and the scale-truncated
// square sums that feed the length lower bound. The grid is absolute
// (anchored at the origin, sides 2^-n); inputs are never re-centered.

namespace maxdist {

// Finite planar point set standing in for the compact set E.
// Exact duplicates are dropped on construction (first occurrence kept).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);

  const std::vector<Point>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  double diameter() const { return diam_; }
  const Hull& hull() const { return hull_; }
  std::size_t duplicates_removed() const { return dups_; }

 private:
  std::vector<Point> pts_;
  Hull hull_;
  double diam_ = 0.0;
  std::size_t dups_ = 0;
};

// Half-open dyadic cube [k*2^-n, (k+1)*2^-n) x [j*2^-n, (j+1)*2^-n).
// Multiplication by 2^n is exact in binary floating point, so membership
// tests are exact. The concentric triple 3Q is closed.
struct DyadicCube {
  int n = 0;
  std::int64_t k = 0;
  std::int64_t j = 0;

  double side() const { return std::ldexp(1.0, -n); }
  double diam() const;  // sqrt(2) * side
  Point corner() const { return {static_cast<double>(k) * side(), static_cast<double>(j) * side()}; }
  bool contains(const Point& p) const;
  bool triple_contains(const Point& p) const;
};

inline bool operator==(const DyadicCube& a, const DyadicCube& b) {
  return a.n == b.n && a.k == b.k && a.j == b.j;
}
inline bool operator<(const DyadicCube& a, const DyadicCube& b) {
  return std::tie(a.n, a.k, a.j) < std::tie(b.n, b.k, b.j);
}

enum class Region { kQ, k3Q };

// Diameter of the measured region (|Q| or |3Q| = 3|Q|).
double region_diam(const DyadicCube& q, Region region);

// Flatness of E inside a cube region: r_value is the smallest half-width of
// a strip containing E there (0 if the region is empty), beta the same
// normalized by the region diameter.
struct BetaResult {
  DyadicCube cube;
  Region region = Region::kQ;
  std::size_t count = 0;
  double r_value = 0.0;
  double beta = 0.0;
  StripFit fit;
};

// All scale-n cubes containing at least one point of E, sorted by (k, j).
std::vector<DyadicCube> enumerate_cubes(const PointSet& e, int n);

BetaResult beta_of_cube(const PointSet& e, const DyadicCube& q, Region region);

struct ScaleLine {
  int n = 0;
  double partial = 0.0;       // sum of terms at this scale
  std::size_t cube_count = 0; // cubes with a nonempty region at this scale
};

struct TermRecord {
  BetaResult beta;
  double term = 0.0;
};

struct SumReport {
  double r = 0.0;  // 0 for the classical sum
  Region variant = Region::kQ;
  double total = 0.0;
  std::vector<ScaleLine> per_scale;  // coarse to fine
  int n_top = 0;
  int n_bottom = 0;
  double upward_truncation_bound = 0.0;  // bound on everything above n_top
  std::vector<TermRecord> terms;         // populated only when requested
};

struct SumOptions {
  double eps_top = -1.0;  // < 0 means the default 1e-12 * diameter(E)
  int threads = 1;
  bool record_terms = false;
};

// Sum of max{beta - r/|region|, 0}^2 * |Q| over dyadic cubes, truncated
// below where terms provably vanish (|region| < r) and above where the
// geometric tail drops under eps_top. Throws std::invalid_argument
// ("use classical_jones_sum for r = 0") when r <= 0.
SumReport truncated_square_sum(const PointSet& e, double r, Region variant,
                               const SumOptions& opts = {});

// Sum of beta_E(3Q)^2 * |Q|; descends until every 3Q at the scale holds at
// most two points (all deeper terms are then zero).
SumReport classical_jones_sum(const PointSet& e, const SumOptions& opts = {});

struct LowerBound {
  double value = 0.0;          // diameter - 2r + sum
  bool point_minimizer = false;  // diameter < 2r: a single point already covers E
  SumReport sum;
};

LowerBound lower_bound(const PointSet& e, double r, Region variant,
                       const SumOptions& opts = {});

// Memoized beta evaluations keyed by cube and region; the hull-tree
// classification hits the same 3Q regions over and over.
class BetaCache {
 public:
  const BetaResult& get(const PointSet& e, const DyadicCube& q, Region region);
  std::size_t size() const { return cache_.size(); }
  const std::map<std::tuple<int, std::int64_t, std::int64_t, int>, BetaResult>& entries() const {
    return cache_;
  }

 private:
  std::map<std::tuple<int, std::int64_t, std::int64_t, int>, BetaResult> cache_;
};

}  // namespace maxdist
