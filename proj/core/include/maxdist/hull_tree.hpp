#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "maxdist/multiscale.hpp"

// Nested convex-hull family over E: each node is the hull of a subset of E,
// split along its diameter segment until every leaf sits inside a dyadic
// cube whose triple is flat at scale r ("good"). The tree carries everything
// the curve assembly and the certification checks need.

namespace maxdist {

// Fixed constants of the length accounting. m0 and M come from the rate at
// which hull areas (and hence flatness) decay along the construction; K
// bounds the length added by one split against beta_hat^2 * diam.
struct Constants {
  int m0 = 0;
  int M = 0;        // diameter halving period: 3 * (m0 + 1)
  double K1 = 0.5;  // slack in sqrt(1 + x) <= 1 + K1 * x for x in [0, 1]
  double K = 0.0;   // split-length constant
  static Constants compute();
};

enum class SplitCase {
  kNone,    // not split (leaf)
  kMiddle,  // a point projects into the middle third; children share it
  kOuter,   // no middle point; children come from the outer thirds, bridged
};

enum class Label { kUnlabeled, kGood, kBad };

// Shortest connection between the two children's point sets.
struct Bridge {
  Point e0;
  Point e1;
  double length = 0.0;
  Segment segment() const { return {e0, e1}; }
};

struct HullNode {
  std::string sigma;  // 0/1 path from the root; "" for the root itself
  int parent = -1;
  std::array<int, 2> children{-1, -1};
  std::vector<std::uint32_t> points;  // sorted indices into E
  Hull hull;
  double diam = 0.0;
  Segment diam_segment;  // endpoints are points of E
  double beta_hat = 0.0; // normalized flatness of the hull
  SplitCase split_case = SplitCase::kNone;
  double z_param = -1.0; // middle-split parameter, in (1/3, 2/3)
  std::optional<Bridge> bridge;
  Label label = Label::kUnlabeled;
  std::optional<DyadicCube> good_cube;       // first cube certifying the label
  std::optional<Segment> chord;              // strip center line clipped to the hull
  std::vector<DyadicCube> associated;        // cubes at the node's own scale

  int depth() const { return static_cast<int>(sigma.size()); }
  bool is_leaf() const { return children[0] < 0; }
};

using CubeKey = std::tuple<int, std::int64_t, std::int64_t>;

inline CubeKey cube_key(const DyadicCube& q) { return {q.n, q.k, q.j}; }

struct HullTree {
  std::vector<HullNode> nodes;  // BFS order; nodes[0] is the root
  Constants constants;
  double r = 0.0;
  int generations = 0;  // deepest depth N; every depth-N node is a leaf
  std::map<CubeKey, std::vector<int>> cubes;  // cube -> associated node ids
};

HullNode make_root(const PointSet& e);

struct SplitResult {
  HullNode child0;
  HullNode child1;
  SplitCase split_case = SplitCase::kNone;
  double z_param = -1.0;
  Bridge bridge;
};

// Split along the diameter segment. Projection parameters in the open middle
// third pick the shared-point split (the parameter closest to 1/2, ties to
// the smaller one); otherwise the outer thirds become the children and the
// bridge is the shortest pairwise connection. Throws std::invalid_argument
// ("leaf node") for single-point nodes.
SplitResult split_node(const HullNode& node, const PointSet& e);

// Cubes at the unique scale with side/2 < diam <= side whose closure meets
// the hull. Single-point hulls get the cube containing the point at the
// finest scale used by the r-truncated sums.
std::vector<DyadicCube> associated_cubes(const HullNode& node, double r);

// Good iff some associated cube's closed triple is r-flat (r_E(3Q) < 2r);
// stores the first good cube and, for rank-2 hulls, the chord cut by the
// flat strip's center line. Single-point nodes are good outright.
Label classify(HullNode& node, const PointSet& e, double r, BetaCache& cache);

// Breadth-first construction: classify, split bad nodes, stop when every
// leaf is good. Throws std::invalid_argument for r <= 0
// ("construction does not terminate at r = 0").
HullTree build_tree(const PointSet& e, double r, BetaCache& cache);

}  // namespace maxdist
