#include "maxdist/hull_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace maxdist {

Constants Constants::compute() {
  Constants c;
  // Generations needed for the per-split area ratio 35/36 to push the
  // flatness bound under the diameter-halving threshold sqrt(17/576)/1024.
  const double target = std::sqrt(17.0 / 576.0) / 1024.0;
  c.m0 = static_cast<int>(std::ceil(std::log(target) / std::log(35.0 / 36.0)));
  c.M = 3 * (c.m0 + 1);
  c.K1 = 0.5;
  c.K = std::max(2.0 * (36.0 * 36.0 * c.K1 + 12.0), 1350.0);
  return c;
}

namespace {

HullNode make_node(const PointSet& e, std::vector<std::uint32_t> idx, std::string sigma,
                   int parent) {
  HullNode node;
  node.sigma = std::move(sigma);
  node.parent = parent;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  node.points = std::move(idx);
  std::vector<Point> pts;
  pts.reserve(node.points.size());
  for (std::uint32_t i : node.points) pts.push_back(e[i]);
  node.hull = convex_hull(pts);
  if (node.hull.rank() >= 1) {
    const DiameterInfo di = diameter_pair(node.hull);
    node.diam = di.length;
    node.diam_segment = di.segment();
    node.beta_hat = hull_beta_hat(node.hull);
  } else {
    node.diam = 0.0;
    node.diam_segment = {node.hull.vertices[0], node.hull.vertices[0]};
    node.beta_hat = 0.0;
  }
  return node;
}

// Largest n with 2^-n >= value (value > 0).
int scale_at_or_above(double value) {
  int n = static_cast<int>(std::floor(-std::log2(value)));
  while (std::ldexp(1.0, -n) < value) --n;
  while (std::ldexp(1.0, -(n + 1)) >= value) ++n;
  return n;
}

bool cube_closure_meets_hull(const DyadicCube& q, const Hull& hull) {
  const double s = q.side();
  const double lx = static_cast<double>(q.k) * s;
  const double ly = static_cast<double>(q.j) * s;
  const double hx = lx + s;
  const double hy = ly + s;
  for (const Point& v : hull.vertices)
    if (v.x >= lx && v.x <= hx && v.y >= ly && v.y <= hy) return true;
  const Point corners[4] = {{lx, ly}, {hx, ly}, {hx, hy}, {lx, hy}};
  for (const Point& c : corners)
    if (hull_contains(hull, c, 0.0)) return true;
  const Segment sides[4] = {
      {corners[0], corners[1]}, {corners[1], corners[2]},
      {corners[2], corners[3]}, {corners[3], corners[0]}};
  for (const Segment& edge : hull_boundary(hull))
    for (const Segment& cs : sides)
      if (dist_segment_segment(edge, cs) == 0.0) return true;
  return false;
}

}  // namespace

HullNode make_root(const PointSet& e) {
  if (e.empty()) throw std::invalid_argument("empty point set");
  std::vector<std::uint32_t> idx(e.size());
  for (std::uint32_t i = 0; i < e.size(); ++i) idx[i] = i;
  return make_node(e, std::move(idx), "", -1);
}

SplitResult split_node(const HullNode& node, const PointSet& e) {
  if (node.points.size() <= 1) throw std::invalid_argument("leaf node");
  const Segment& axis = node.diam_segment;
  std::vector<double> t(node.points.size());
  for (std::size_t i = 0; i < node.points.size(); ++i)
    t[i] = project_onto_segment_line(e[node.points[i]], axis);

  // Pick the middle-third projection closest to 1/2 if there is one.
  constexpr double lo = 1.0 / 3.0, hi = 2.0 / 3.0;
  int z_idx = -1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= lo || t[i] >= hi) continue;
    if (z_idx < 0 || std::abs(t[i] - 0.5) < std::abs(t[z_idx] - 0.5) ||
        (std::abs(t[i] - 0.5) == std::abs(t[z_idx] - 0.5) && t[i] < t[z_idx])) {
      z_idx = static_cast<int>(i);
    }
  }
  // Degenerate middle parameters next to an endpoint fall back to the
  // outer-thirds split (cannot happen for a genuine middle hit, but keeps
  // the children strictly smaller under any tolerance drift).
  if (z_idx >= 0 && (t[z_idx] <= kEps || t[z_idx] >= 1.0 - kEps)) z_idx = -1;

  SplitResult res;
  std::vector<std::uint32_t> left, right;
  if (z_idx >= 0) {
    res.split_case = SplitCase::kMiddle;
    res.z_param = t[z_idx];
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] <= res.z_param) left.push_back(node.points[i]);
      if (t[i] >= res.z_param) right.push_back(node.points[i]);
    }
    const Point z = e[node.points[z_idx]];
    res.bridge = {z, z, 0.0};
  } else {
    res.split_case = SplitCase::kOuter;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] <= lo) {
        left.push_back(node.points[i]);
      } else {
        right.push_back(node.points[i]);
      }
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t a : left) {
      for (std::uint32_t b : right) {
        const double d = dist(e[a], e[b]);
        if (d < best) {
          best = d;
          res.bridge = {e[a], e[b], d};
        }
      }
    }
  }
  res.child0 = make_node(e, std::move(left), node.sigma + "0", -1);
  res.child1 = make_node(e, std::move(right), node.sigma + "1", -1);
  return res;
}

std::vector<DyadicCube> associated_cubes(const HullNode& node, double r) {
  if (node.diam <= 0.0) {
    // Single-point hull: the cube holding the point at the finest scale the
    // r-truncated sums descend to.
    const int n = scale_at_or_above(r / std::numbers::sqrt2);
    const Point& p = node.hull.vertices[0];
    const DyadicCube q{n, static_cast<std::int64_t>(std::floor(std::ldexp(p.x, n))),
                       static_cast<std::int64_t>(std::floor(std::ldexp(p.y, n)))};
    return {q};
  }
  const int n = scale_at_or_above(node.diam);  // side/2 < diam <= side
  const double s = std::ldexp(1.0, -n);
  double lx = node.hull.vertices[0].x, hx = lx;
  double ly = node.hull.vertices[0].y, hy = ly;
  for (const Point& v : node.hull.vertices) {
    lx = std::min(lx, v.x);
    hx = std::max(hx, v.x);
    ly = std::min(ly, v.y);
    hy = std::max(hy, v.y);
  }
  const auto k0 = static_cast<std::int64_t>(std::floor(lx / s)) - 1;
  const auto k1 = static_cast<std::int64_t>(std::floor(hx / s)) + 1;
  const auto j0 = static_cast<std::int64_t>(std::floor(ly / s)) - 1;
  const auto j1 = static_cast<std::int64_t>(std::floor(hy / s)) + 1;
  std::vector<DyadicCube> out;
  for (std::int64_t k = k0; k <= k1; ++k)
    for (std::int64_t j = j0; j <= j1; ++j)
      if (cube_closure_meets_hull({n, k, j}, node.hull)) out.push_back({n, k, j});
  return out;
}

Label classify(HullNode& node, const PointSet& e, double r, BetaCache& cache) {
  node.associated = associated_cubes(node, r);
  if (node.diam <= 0.0) {
    node.label = Label::kGood;
    node.good_cube = node.associated.front();
    return node.label;
  }
  for (const DyadicCube& q : node.associated) {
    const BetaResult& b3 = cache.get(e, q, Region::k3Q);
    if (b3.r_value < 2.0 * r) {
      node.label = Label::kGood;
      node.good_cube = q;
      if (node.hull.rank() == 2) {
        node.chord = clip_line_to_hull(b3.fit.anchor, b3.fit.direction, node.hull);
      }
      return node.label;
    }
  }
  node.label = Label::kBad;
  return node.label;
}

HullTree build_tree(const PointSet& e, double r, BetaCache& cache) {
  if (r <= 0.0) throw std::invalid_argument("construction does not terminate at r = 0");
  HullTree tree;
  tree.constants = Constants::compute();
  tree.r = r;
  tree.nodes.push_back(make_root(e));
  for (std::size_t cur = 0; cur < tree.nodes.size(); ++cur) {
    if (classify(tree.nodes[cur], e, r, cache) == Label::kGood) continue;
    SplitResult split = split_node(tree.nodes[cur], e);
    const int i0 = static_cast<int>(tree.nodes.size());
    split.child0.parent = static_cast<int>(cur);
    split.child1.parent = static_cast<int>(cur);
    HullNode& parent = tree.nodes[cur];
    parent.split_case = split.split_case;
    parent.z_param = split.z_param;
    parent.bridge = split.bridge;
    parent.children = {i0, i0 + 1};
    tree.nodes.push_back(std::move(split.child0));
    tree.nodes.push_back(std::move(split.child1));
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    tree.generations = std::max(tree.generations, tree.nodes[i].depth());
    for (const DyadicCube& q : tree.nodes[i].associated)
      tree.cubes[cube_key(q)].push_back(static_cast<int>(i));
  }
  return tree;
}

}  // namespace maxdist
