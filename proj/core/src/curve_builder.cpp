#include "maxdist/curve_builder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxdist {

std::vector<Segment> good_hull_piece(const HullNode& node) {
  if (node.label != Label::kGood) throw std::invalid_argument("node is not labeled good");
  std::vector<Segment> out = hull_boundary(node.hull);
  if (node.chord && node.chord->length() > 0.0) out.push_back(*node.chord);
  return out;
}

namespace {

void add_good_piece(Curve& curve, const HullNode& node) {
  if (node.hull.rank() == 0) {
    curve.isolated_points.push_back(node.hull.vertices[0]);
    return;
  }
  for (const Segment& s : good_hull_piece(node)) {
    const PieceKind kind = (node.chord && s.p == node.chord->p && s.q == node.chord->q)
                               ? PieceKind::kChord
                               : PieceKind::kBoundary;
    curve.segments.push_back({s, kind, node.sigma});
  }
}

void add_bridge(Curve& curve, const HullNode& node) {
  const Bridge& b = *node.bridge;
  if (b.length > 0.0) {
    curve.segments.push_back({b.segment(), PieceKind::kBridge, node.sigma});
  } else {
    curve.isolated_points.push_back(b.e0);
  }
}

}  // namespace

Assembly assemble(const HullTree& tree, const PointSet& e, bool snapshots) {
  (void)e;
  Assembly out;
  out.trace.n_generations = tree.generations;
  out.trace.generations.resize(tree.generations + 1);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const HullNode& node = tree.nodes[i];
    if (node.label == Label::kUnlabeled) throw std::runtime_error("classification incomplete");
    auto& gen = out.trace.generations[node.depth()];
    (node.label == Label::kGood ? gen.good : gen.bad).push_back(static_cast<int>(i));
  }
  for (const HullNode& node : tree.nodes) {
    if (node.label == Label::kGood) {
      add_good_piece(out.curve, node);
    } else if (node.bridge) {
      add_bridge(out.curve, node);
    }
  }
  if (snapshots) {
    for (int j = 0; j <= tree.generations; ++j) {
      Curve snap;
      for (const HullNode& node : tree.nodes) {
        const int d = node.depth();
        if (node.label == Label::kGood && d <= j) {
          add_good_piece(snap, node);
        } else if (node.label == Label::kBad) {
          if (d == j) {
            // Unresolved at this stage: drawn as its boundary polygon.
            for (const Segment& s : hull_boundary(node.hull))
              snap.segments.push_back({s, PieceKind::kBoundary, node.sigma});
            if (node.hull.rank() == 0) snap.isolated_points.push_back(node.hull.vertices[0]);
          } else if (d < j && node.bridge) {
            add_bridge(snap, node);
          }
        }
      }
      out.trace.snapshots.push_back(std::move(snap));
    }
  }
  return out;
}

double termination_bound(double diam, double r, const Constants& c) {
  double gens = 0.0;
  if (diam > 0.0 && r > 0.0) gens = std::max(0.0, std::ceil(std::log2(3.0 * diam / r)));
  return c.M * (gens + 1.0);
}

}  // namespace maxdist
