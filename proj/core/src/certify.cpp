#include "maxdist/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "maxdist/parallel.hpp"

namespace maxdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) c += find(i) == i;
    return c;
  }
};

double dist_point_curve(const Point& p, const Curve& curve) {
  double best = kInf;
  for (const CurvePiece& piece : curve.segments)
    best = std::min(best, dist_point_segment(p, piece.seg));
  for (const Point& q : curve.isolated_points) best = std::min(best, dist(p, q));
  return best;
}

}  // namespace

CoverageResult coverage_check(const PointSet& e, const Curve& curve, double r, double tol,
                              int threads) {
  CoverageResult res;
  if (e.empty()) {
    res.ok = true;
    res.worst_residual = -r;
    return res;
  }
  if (curve.empty()) {
    res.ok = false;
    res.worst_residual = kInf;
    res.worst_point = e[0];
    return res;
  }
  std::vector<double> d(e.size());
  parallel_for(e.size(), threads, [&](std::size_t i) { d[i] = dist_point_curve(e[i], curve); });
  std::size_t worst = 0;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] > d[worst]) worst = i;
  res.worst_point = e[worst];
  res.worst_residual = d[worst] - r;
  res.ok = res.worst_residual <= tol;
  return res;
}

ConnectivityResult connectivity_check(const Curve& curve, double tol) {
  const std::size_t ns = curve.segments.size();
  const std::size_t n = ns + curve.isolated_points.size();
  ConnectivityResult res;
  res.elements = n;
  if (n == 0) {
    res.ok = true;
    return res;
  }
  auto elem_dist = [&](std::size_t a, std::size_t b) {
    const bool sa = a < ns, sb = b < ns;
    if (sa && sb) return dist_segment_segment(curve.segments[a].seg, curve.segments[b].seg);
    if (sa) return dist_point_segment(curve.isolated_points[b - ns], curve.segments[a].seg);
    if (sb) return dist_point_segment(curve.isolated_points[a - ns], curve.segments[b].seg);
    return dist(curve.isolated_points[a - ns], curve.isolated_points[b - ns]);
  };
  Dsu dsu(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dsu.find(i) != dsu.find(j) && elem_dist(i, j) <= tol) dsu.merge(i, j);
  res.components = dsu.components();
  res.ok = res.components <= 1;
  return res;
}

double h1_length(std::span<const Segment> segs, double tol) {
  std::vector<Segment> s;
  s.reserve(segs.size());
  for (const Segment& seg : segs)
    if (seg.length() > 0.0) s.push_back(seg);
  if (s.empty()) return 0.0;

  std::vector<Point> dir(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Point d = s[i].q - s[i].p;
    const double len = norm(d);
    dir[i] = {d.x / len, d.y / len};
  }
  // Merge segments that lie on the same line and overlap; each merged group
  // is a single interval, so its measure is the projected span.
  Dsu dsu(s.size());
  auto interval_on = [&](std::size_t base, std::size_t i, double& lo, double& hi) {
    const double a = dot(s[i].p - s[base].p, dir[base]);
    const double b = dot(s[i].q - s[base].p, dir[base]);
    lo = std::min(a, b);
    hi = std::max(a, b);
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (dsu.find(i) == dsu.find(j)) continue;
      if (std::abs(cross(dir[i], dir[j])) > 1e-9) continue;
      if (dist_point_line(s[j].p, s[i].p, dir[i]) > tol) continue;
      if (dist_point_line(s[j].q, s[i].p, dir[i]) > tol) continue;
      double li, hi_i, lj, hj;
      interval_on(i, i, li, hi_i);
      interval_on(i, j, lj, hj);
      if (std::max(li, lj) <= std::min(hi_i, hj) + tol) dsu.merge(i, j);
    }
  }
  // Span of each group along its longest member's direction.
  std::map<std::size_t, std::size_t> rep;  // group root -> longest member
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t root = dsu.find(i);
    auto it = rep.find(root);
    if (it == rep.end() || s[i].length() > s[it->second].length()) rep[root] = i;
  }
  double total = 0.0;
  for (const auto& [root, base] : rep) {
    double lo = kInf, hi = -kInf;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (dsu.find(i) != root) continue;
      double a, b;
      interval_on(base, i, a, b);
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
    total += hi - lo;
  }
  return total;
}

double curve_length(const Curve& curve, double tol) {
  std::vector<Segment> segs;
  segs.reserve(curve.segments.size());
  for (const CurvePiece& piece : curve.segments) segs.push_back(piece.seg);
  return h1_length(segs, tol);
}

double two_point_oracle(double d, double r) { return d > 2.0 * r ? d - 2.0 * r : 0.0; }

double hausdorff_distance(const Curve& a, const Curve& b, double step) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty curve");
  if (step <= 0.0) throw std::invalid_argument("step must be positive");
  auto directed = [step](const Curve& from, const Curve& to) {
    double worst = 0.0;
    auto visit = [&](const Point& p) { worst = std::max(worst, dist_point_curve(p, to)); };
    for (const CurvePiece& piece : from.segments) {
      const double len = piece.seg.length();
      const int m = std::max(1, static_cast<int>(std::ceil(len / step)));
      for (int i = 0; i <= m; ++i) {
        const double t = static_cast<double>(i) / m;
        visit(piece.seg.p + t * (piece.seg.q - piece.seg.p));
      }
    }
    for (const Point& p : from.isolated_points) visit(p);
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

bool BoundsReport::all_pass() const {
  for (const auto& [name, check] : checks)
    if (!check.pass) return false;
  return true;
}

namespace {

struct TreeTotals {
  double good_diam = 0.0;    // sum of |C| over good leaves
  double bridge_len = 0.0;   // sum of bridge lengths over split nodes
  double bad_beta_sq = 0.0;  // sum of beta_hat^2 * |C| over bad nodes
};

TreeTotals tree_totals(const HullTree& tree) {
  TreeTotals t;
  for (const HullNode& node : tree.nodes) {
    if (node.label == Label::kGood) {
      t.good_diam += node.diam;
    } else {
      t.bad_beta_sq += node.beta_hat * node.beta_hat * node.diam;
      if (node.bridge) t.bridge_len += node.bridge->length;
    }
  }
  return t;
}

CheckResult make_check(double residual, double tol) { return {residual <= tol, residual}; }

double check_split_lengths(const HullTree& tree) {
  double worst = -kInf;
  for (const HullNode& node : tree.nodes) {
    if (node.is_leaf()) continue;
    const HullNode& c0 = tree.nodes[node.children[0]];
    const HullNode& c1 = tree.nodes[node.children[1]];
    const double lhs = c0.diam + 0.5 * node.bridge->length + c1.diam;
    const double rhs = node.diam + tree.constants.K * node.beta_hat * node.beta_hat * node.diam;
    worst = std::max(worst, lhs - rhs);
  }
  return worst == -kInf ? 0.0 : worst;
}

double check_seven_bound(const HullTree& tree, double tol) {
  double worst = -kInf;
  for (const HullNode& node : tree.nodes) {
    if (node.label != Label::kGood) continue;
    const std::vector<Segment> piece = good_hull_piece(node);
    worst = std::max(worst, h1_length(piece, tol) - 7.0 * node.diam);
  }
  return worst == -kInf ? 0.0 : worst;
}

double check_area_sandwich(const HullTree& tree) {
  double worst = -kInf;
  for (const HullNode& node : tree.nodes) {
    if (node.hull.rank() != 2) continue;
    const double area = hull_area(node.hull);
    const double scale = node.beta_hat * node.diam * node.diam;
    worst = std::max({worst, 0.5 * scale - area, area - 2.0 * scale});
  }
  return worst == -kInf ? 0.0 : worst;
}

double check_multiplicity(const HullTree& tree, const PointSet& e) {
  std::size_t worst = 0;
  for (const auto& [key, node_ids] : tree.cubes) {
    const DyadicCube q{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
    for (std::uint32_t i = 0; i < e.size(); ++i) {
      if (!q.contains(e[i])) continue;
      std::size_t count = 0;
      for (int id : node_ids) {
        const auto& pts = tree.nodes[id].points;
        count += std::binary_search(pts.begin(), pts.end(), i);
      }
      worst = std::max(worst, count);
    }
  }
  return static_cast<double>(worst) - tree.constants.M;
}

double check_cube_sums(const HullTree& tree, const PointSet& e, double r, BetaCache& cache) {
  const double c288 = 288.0 * tree.constants.M;
  const double c288_sq = c288 * c288;
  double worst = -kInf;
  for (const auto& [key, node_ids] : tree.cubes) {
    const DyadicCube q{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
    double lhs = 0.0;
    for (int id : node_ids) {
      const HullNode& node = tree.nodes[id];
      lhs += node.beta_hat * node.beta_hat * node.diam;
    }
    const BetaResult& b3 = cache.get(e, q, Region::k3Q);
    worst = std::max(worst, lhs - c288_sq * b3.beta * b3.beta * q.diam());
    if (b3.r_value >= 2.0 * r) {  // cube that forced its hulls to keep splitting
      const double excess = b3.beta - r / region_diam(q, Region::k3Q);
      worst = std::max(worst, lhs - c288_sq * excess * excess * q.diam());
    }
  }
  return worst == -kInf ? 0.0 : worst;
}

double check_diameter_halving(const HullTree& tree) {
  const int period = tree.constants.M;
  double worst = -kInf;
  for (const HullNode& node : tree.nodes) {
    if (node.depth() < period) continue;
    int up = node.parent;
    for (int hop = 1; hop < period; ++hop) up = tree.nodes[up].parent;
    worst = std::max(worst, node.diam - 0.5 * tree.nodes[up].diam);
  }
  return worst == -kInf ? 0.0 : worst;
}

std::size_t count_overlap_pairs(const HullTree& tree, double tol) {
  std::map<int, std::vector<int>> by_depth;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    by_depth[tree.nodes[i].depth()].push_back(static_cast<int>(i));
  auto overlaps = [&](const Hull& a, const Hull& b) {
    for (const Point& v : a.vertices)
      if (hull_contains(b, v, -tol)) return true;  // strictly inside by tol
    for (const Point& v : b.vertices)
      if (hull_contains(a, v, -tol)) return true;
    return false;
  };
  std::size_t count = 0;
  for (const auto& [depth, ids] : by_depth)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        count += overlaps(tree.nodes[ids[a]].hull, tree.nodes[ids[b]].hull);
  return count;
}

}  // namespace

PipelineResult evaluate_bounds(const PointSet& e, double r, const EvalOptions& opts) {
  if (e.empty()) throw std::invalid_argument("empty point set");
  PipelineResult res;
  const double diam = e.diameter();
  const double tol = 1e-9 * std::max(1.0, diam);

  SumOptions sum_opts;
  sum_opts.eps_top = opts.eps_top;
  sum_opts.threads = opts.threads;
  sum_opts.record_terms = opts.record_terms;
  res.sum_q = truncated_square_sum(e, r, Region::kQ, sum_opts);
  res.sum_3q = truncated_square_sum(e, r, Region::k3Q, sum_opts);

  BetaCache cache;
  res.tree = build_tree(e, r, cache);
  Assembly assembly = assemble(res.tree, e, opts.snapshots);
  res.curve = std::move(assembly.curve);
  res.trace = std::move(assembly.trace);

  BoundsReport& rep = res.report;
  rep.r = r;
  rep.diameter = diam;
  rep.variant = opts.variant;
  const SumReport& sum_sel = opts.variant == Region::kQ ? res.sum_q : res.sum_3q;
  rep.lower = diam - 2.0 * r + sum_sel.total;
  rep.point_minimizer = diam < 2.0 * r;
  rep.truncated_sum_q = res.sum_q.total;
  rep.truncated_sum_3q = res.sum_3q.total;
  rep.generations = res.tree.generations;
  rep.curve_length = curve_length(res.curve, tol);
  rep.curve_segments = res.curve.segments.size();
  rep.curve_isolated = res.curve.isolated_points.size();
  rep.overlap_pairs = count_overlap_pairs(res.tree, tol);

  const CoverageResult cov = coverage_check(e, res.curve, r, tol, opts.threads);
  rep.checks["coverage"] = {cov.ok, cov.worst_residual};
  const ConnectivityResult con = connectivity_check(res.curve, tol);
  rep.checks["connectivity"] = {con.ok, static_cast<double>(con.components) - 1.0};

  rep.checks["K_split"] = make_check(check_split_lengths(res.tree), tol);
  rep.checks["seven_bound"] = make_check(check_seven_bound(res.tree, tol), tol);
  rep.checks["area_sandwich"] = make_check(check_area_sandwich(res.tree), tol);
  rep.checks["multiplicity"] = make_check(check_multiplicity(res.tree, e), 0.0);
  rep.checks["lemma_288M"] = make_check(check_cube_sums(res.tree, e, r, cache), tol);
  rep.checks["diameter_halving"] = make_check(check_diameter_halving(res.tree), tol);

  const TreeTotals totals = tree_totals(res.tree);
  const double telescoped = totals.good_diam + 0.5 * totals.bridge_len;
  const double bad_term = res.tree.constants.K * totals.bad_beta_sq;
  rep.checks["telescoping"] = make_check(telescoped - (diam + bad_term), tol);
  rep.telescoping_unit_residual = telescoped - (diam + totals.bad_beta_sq);
  const double chain = std::max(rep.curve_length - 7.0 * telescoped,
                                rep.curve_length - 7.0 * (diam + bad_term));
  rep.checks["length_chain"] = make_check(chain, tol);
  rep.checks["termination"] = make_check(
      rep.generations - termination_bound(diam, r, res.tree.constants), tol);
  rep.checks["lower_vs_length"] = make_check(rep.lower - (rep.curve_length + 2.0 * r), tol);
  return res;
}

}  // namespace maxdist
