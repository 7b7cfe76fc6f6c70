#include "maxdist/multiscale.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "maxdist/parallel.hpp"

namespace maxdist {

PointSet::PointSet(std::vector<Point> pts) {
  std::set<Point> seen;
  pts_.reserve(pts.size());
  for (const Point& p : pts) {
    if (seen.insert(p).second) {
      pts_.push_back(p);
    } else {
      ++dups_;
    }
  }
  if (!pts_.empty()) {
    hull_ = convex_hull(pts_);
    diam_ = diameter_pair(hull_).length;
  }
}

double DyadicCube::diam() const { return std::numbers::sqrt2 * side(); }

bool DyadicCube::contains(const Point& p) const {
  const double s = side();
  const double kx = static_cast<double>(k) * s;
  const double jy = static_cast<double>(j) * s;
  return p.x >= kx && p.x < kx + s && p.y >= jy && p.y < jy + s;
}

bool DyadicCube::triple_contains(const Point& p) const {
  const double s = side();
  const double lx = static_cast<double>(k - 1) * s;
  const double ly = static_cast<double>(j - 1) * s;
  return p.x >= lx && p.x <= lx + 3.0 * s && p.y >= ly && p.y <= ly + 3.0 * s;
}

double region_diam(const DyadicCube& q, Region region) {
  return region == Region::kQ ? q.diam() : 3.0 * q.diam();
}

namespace {

using Cell = std::pair<std::int64_t, std::int64_t>;
using CellMap = std::map<Cell, std::vector<std::uint32_t>>;

Cell cell_of(const Point& p, int n) {
  return {static_cast<std::int64_t>(std::floor(std::ldexp(p.x, n))),
          static_cast<std::int64_t>(std::floor(std::ldexp(p.y, n)))};
}

CellMap bucket_points(const PointSet& e, int n) {
  CellMap cells;
  for (std::uint32_t i = 0; i < e.size(); ++i) cells[cell_of(e[i], n)].push_back(i);
  return cells;
}

// Cubes that can have a nonempty region at this scale. For Q these are the
// occupied cells; for the closed 3Q a point on a grid line can also touch the
// triple of a cube two cells away, hence offsets in [-2, 1].
std::vector<DyadicCube> candidate_cubes(const CellMap& cells, int n, Region variant) {
  std::set<Cell> keys;
  for (const auto& [cell, idx] : cells) {
    if (variant == Region::kQ) {
      keys.insert(cell);
    } else {
      for (std::int64_t dk = -2; dk <= 1; ++dk)
        for (std::int64_t dj = -2; dj <= 1; ++dj)
          keys.insert({cell.first + dk, cell.second + dj});
    }
  }
  std::vector<DyadicCube> out;
  out.reserve(keys.size());
  for (const Cell& c : keys) out.push_back({n, c.first, c.second});
  return out;
}

std::vector<Point> gather_region(const PointSet& e, const CellMap& cells, const DyadicCube& q,
                                 Region variant) {
  std::vector<Point> pts;
  if (variant == Region::kQ) {
    auto it = cells.find({q.k, q.j});
    if (it != cells.end())
      for (std::uint32_t i : it->second) pts.push_back(e[i]);
    return pts;
  }
  for (std::int64_t kk = q.k - 1; kk <= q.k + 2; ++kk) {
    for (std::int64_t jj = q.j - 1; jj <= q.j + 2; ++jj) {
      auto it = cells.find({kk, jj});
      if (it == cells.end()) continue;
      for (std::uint32_t i : it->second)
        if (q.triple_contains(e[i])) pts.push_back(e[i]);
    }
  }
  return pts;
}

BetaResult beta_from_points(const DyadicCube& q, Region region, std::span<const Point> pts) {
  BetaResult res;
  res.cube = q;
  res.region = region;
  res.count = pts.size();
  if (pts.empty()) return res;
  res.fit = min_width_strip(pts);
  res.r_value = 0.5 * res.fit.width;
  res.beta = res.r_value / region_diam(q, region);
  return res;
}

// Largest n with value * 2^-n >= threshold (threshold > 0).
int finest_scale_with(double value, double threshold) {
  int n = static_cast<int>(std::floor(std::log2(value / threshold)));
  while (value * std::ldexp(1.0, -n) < threshold) --n;
  while (value * std::ldexp(1.0, -(n + 1)) >= threshold) ++n;
  return n;
}

// Tail of the upward-truncated sum: above a scale whose side reaches diam(E),
// at most 16 cubes per scale meet E (or have E in their closed triple), each
// term at most w^2/|Q|; the scales form a geometric series with ratio 1/2.
double upward_tail_bound(double half_width, int n_top) {
  return 12.0 * half_width * half_width * std::ldexp(1.0, n_top);
}

struct ScalePlan {
  int n_top = 0;
  double bound = 0.0;
};

ScalePlan plan_upward(double diam, double half_width, double eps_top, int n_cap) {
  ScalePlan plan;
  if (diam <= 0.0) {
    plan.n_top = n_cap;
    return plan;
  }
  const int n_diam = finest_scale_with(1.0, diam);  // largest n with 2^-n >= diam
  if (half_width <= 0.0) {
    plan.n_top = std::min(n_diam, n_cap);
    return plan;
  }
  if (eps_top <= 0.0) throw std::invalid_argument("eps_top must be positive");
  int n_eps = static_cast<int>(std::floor(std::log2(eps_top / (12.0 * half_width * half_width))));
  while (upward_tail_bound(half_width, n_eps) > eps_top) --n_eps;
  plan.n_top = std::min({n_eps, n_diam, n_cap});
  plan.bound = upward_tail_bound(half_width, plan.n_top);
  return plan;
}

double resolve_eps_top(const SumOptions& opts, double diam) {
  return opts.eps_top < 0.0 ? 1e-12 * diam : opts.eps_top;
}

// One scale of a square sum. term_of maps a BetaResult to its contribution.
template <class TermFn>
ScaleLine sum_one_scale(const PointSet& e, int n, Region variant, const SumOptions& opts,
                        SumReport& rep, std::size_t& max_count, TermFn&& term_of) {
  const CellMap cells = bucket_points(e, n);
  const std::vector<DyadicCube> cands = candidate_cubes(cells, n, variant);
  std::vector<BetaResult> betas(cands.size());
  parallel_for(cands.size(), opts.threads, [&](std::size_t i) {
    betas[i] = beta_from_points(cands[i], variant, gather_region(e, cells, cands[i], variant));
  });
  ScaleLine line;
  line.n = n;
  max_count = 0;
  for (const BetaResult& b : betas) {
    if (b.count == 0) continue;
    ++line.cube_count;
    max_count = std::max(max_count, b.count);
    const double term = term_of(b);
    line.partial += term;
    if (opts.record_terms) rep.terms.push_back({b, term});
  }
  return line;
}

}  // namespace

std::vector<DyadicCube> enumerate_cubes(const PointSet& e, int n) {
  std::set<Cell> keys;
  for (const Point& p : e.points()) keys.insert(cell_of(p, n));
  std::vector<DyadicCube> out;
  out.reserve(keys.size());
  for (const Cell& c : keys) out.push_back({n, c.first, c.second});
  return out;
}

BetaResult beta_of_cube(const PointSet& e, const DyadicCube& q, Region region) {
  std::vector<Point> pts;
  for (const Point& p : e.points()) {
    const bool in = region == Region::kQ ? q.contains(p) : q.triple_contains(p);
    if (in) pts.push_back(p);
  }
  return beta_from_points(q, region, pts);
}

SumReport truncated_square_sum(const PointSet& e, double r, Region variant,
                               const SumOptions& opts) {
  if (r <= 0.0) throw std::invalid_argument("use classical_jones_sum for r = 0");
  SumReport rep;
  rep.r = r;
  rep.variant = variant;
  if (e.empty()) return rep;

  const double diam = e.diameter();
  const double w = e.size() > 1 ? 0.5 * min_width_strip(e.points()).width : 0.0;
  // Terms vanish once |region| < r, since r_E(region) <= |region|.
  const double c = variant == Region::kQ ? std::numbers::sqrt2 : 3.0 * std::numbers::sqrt2;
  rep.n_bottom = finest_scale_with(c, r);
  const ScalePlan plan = plan_upward(diam, w, resolve_eps_top(opts, diam), rep.n_bottom);
  rep.n_top = plan.n_top;
  rep.upward_truncation_bound = plan.bound;

  const double rq = r;
  for (int n = rep.n_top; n <= rep.n_bottom; ++n) {
    std::size_t max_count = 0;
    ScaleLine line = sum_one_scale(e, n, variant, opts, rep, max_count, [&](const BetaResult& b) {
      const double excess = b.beta - rq / region_diam(b.cube, variant);
      if (excess <= 0.0) return 0.0;
      return excess * excess * b.cube.diam();
    });
    rep.per_scale.push_back(line);
    rep.total += line.partial;
  }
  return rep;
}

SumReport classical_jones_sum(const PointSet& e, const SumOptions& opts) {
  SumReport rep;
  rep.r = 0.0;
  rep.variant = Region::k3Q;
  if (e.empty()) return rep;

  const double diam = e.diameter();
  const double w = e.size() > 1 ? 0.5 * min_width_strip(e.points()).width : 0.0;
  if (diam <= 0.0 || w <= 0.0) return rep;  // collinear sets have an identically zero sum

  constexpr int kScaleCap = 62;
  const ScalePlan plan = plan_upward(diam, w, resolve_eps_top(opts, diam), kScaleCap);
  rep.n_top = plan.n_top;
  rep.upward_truncation_bound = plan.bound;

  for (int n = rep.n_top;; ++n) {
    if (n > kScaleCap) throw std::runtime_error("dyadic descent exceeded the scale cap");
    std::size_t max_count = 0;
    ScaleLine line = sum_one_scale(e, n, Region::k3Q, opts, rep, max_count,
                                   [](const BetaResult& b) { return b.beta * b.beta * b.cube.diam(); });
    rep.per_scale.push_back(line);
    rep.total += line.partial;
    rep.n_bottom = n;
    // Once every closed triple holds <= 2 points, all finer triples do too
    // (each is nested in one at this scale), so every deeper term is zero.
    if (max_count <= 2) break;
  }
  return rep;
}

LowerBound lower_bound(const PointSet& e, double r, Region variant, const SumOptions& opts) {
  LowerBound lb;
  lb.sum = truncated_square_sum(e, r, variant, opts);
  const double diam = e.diameter();
  lb.value = diam - 2.0 * r + lb.sum.total;
  lb.point_minimizer = diam < 2.0 * r;
  return lb;
}

const BetaResult& BetaCache::get(const PointSet& e, const DyadicCube& q, Region region) {
  const auto key = std::make_tuple(q.n, q.k, q.j, static_cast<int>(region));
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, beta_of_cube(e, q, region)).first;
  return it->second;
}

}  // namespace maxdist
