#pragma once

#include "maxdist/hull_tree.hpp"

// Assembles the covering curve from a classified hull tree: boundaries and
// chords of the good leaves plus the bridges of every split node.

namespace maxdist {

enum class PieceKind { kBoundary, kChord, kBridge };

struct CurvePiece {
  Segment seg;
  PieceKind kind = PieceKind::kBoundary;
  std::string sigma;  // node the piece came from
};

struct Curve {
  std::vector<CurvePiece> segments;   // never zero-length
  std::vector<Point> isolated_points; // zero-length pieces land here
  bool empty() const { return segments.empty() && isolated_points.empty(); }
};

struct GenerationTrace {
  std::vector<int> good;  // node ids at this depth
  std::vector<int> bad;
};

struct AssemblyTrace {
  int n_generations = 0;                    // depth of the deepest node
  std::vector<GenerationTrace> generations; // one entry per depth 0..N
  std::vector<Curve> snapshots;             // per-depth views when requested
};

struct Assembly {
  Curve curve;
  AssemblyTrace trace;
};

// Boundary segments plus a positive-length chord of a good node. Rank-0
// nodes yield no segments (their piece is the point itself). Throws
// std::invalid_argument("node is not labeled good") otherwise.
std::vector<Segment> good_hull_piece(const HullNode& node);

// Union of good leaf pieces and split bridges. Zero-length bridges become
// isolated points (they always lie on the adjacent leaf boundaries).
// Snapshots render not-yet-resolved nodes as boundary polygons, a display
// convention only. Throws std::runtime_error("classification incomplete")
// if any node is unlabeled.
Assembly assemble(const HullTree& tree, const PointSet& e, bool snapshots = false);

// Upper bound on the number of generations the construction can need:
// M * (ceil(log2(3 * diam / r)) + 1), with the log clamped at zero.
double termination_bound(double diam, double r, const Constants& c);

}  // namespace maxdist
