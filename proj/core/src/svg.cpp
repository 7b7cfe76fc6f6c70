#include "maxdist/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>

namespace maxdist {

namespace {

constexpr double kCanvas = 800.0;

struct Mapper {
  double lo_x = 0.0, lo_y = 0.0, k = 1.0;
  double x(double v) const { return (v - lo_x) * k; }
  double y(double v) const { return kCanvas - (v - lo_y) * k; }  // flip: math y up
};

void appendf(std::string& out, const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  out += buf;
}

const char* depth_color(int depth) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  return palette[depth % 8];
}

void append_polyline(std::string& out, const Mapper& m, const Hull& hull, const char* color,
                     bool dashed) {
  if (hull.rank() == 0) {
    appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"%s\"/>\n",
            m.x(hull.vertices[0].x), m.y(hull.vertices[0].y), color);
    return;
  }
  out += hull.rank() == 1 ? "<polyline points=\"" : "<polygon points=\"";
  for (const Point& v : hull.vertices) appendf(out, "%.2f,%.2f ", m.x(v.x), m.y(v.y));
  out.pop_back();
  appendf(out, "\" fill=\"none\" stroke=\"%s\" stroke-width=\"1\"%s/>\n", color,
          dashed ? " stroke-dasharray=\"4 3\"" : "");
}

}  // namespace

std::string render_svg(const PointSet& e, const HullTree& tree, const Curve& curve, double r) {
  double lo_x = e[0].x, lo_y = e[0].y, hi_x = e[0].x, hi_y = e[0].y;
  auto grow = [&](const Point& p) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  };
  for (const Point& p : e.points()) grow(p);
  for (const CurvePiece& piece : curve.segments) {
    grow(piece.seg.p);
    grow(piece.seg.q);
  }
  const double pad = r + 0.05 * std::max({hi_x - lo_x, hi_y - lo_y, 1e-3});
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;

  Mapper m;
  m.lo_x = lo_x;
  m.lo_y = lo_y;
  m.k = kCanvas / std::max(hi_x - lo_x, hi_y - lo_y);

  std::string out;
  appendf(out,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
          "viewBox=\"0 0 %.0f %.0f\">\n",
          kCanvas, kCanvas, kCanvas, kCanvas);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // r-disks sampled along the curve, spaced about r/2.
  out += "<g id=\"r-disks\" fill=\"#a6d8ff\" fill-opacity=\"0.25\" stroke=\"none\">\n";
  const double disk_px = r * m.k;
  auto disk = [&](const Point& p) {
    appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\"/>\n", m.x(p.x), m.y(p.y), disk_px);
  };
  const double step = std::max(r / 2.0, 1e-9);
  for (const CurvePiece& piece : curve.segments) {
    const double len = piece.seg.length();
    const int steps = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int i = 0; i <= steps; ++i) {
      const double t = static_cast<double>(i) / steps;
      disk(piece.seg.p + t * (piece.seg.q - piece.seg.p));
    }
  }
  for (const Point& p : curve.isolated_points) disk(p);
  out += "</g>\n";

  // Hull tree, one layer per generation; bad hulls dashed.
  std::map<int, std::vector<int>> by_depth;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    by_depth[tree.nodes[i].depth()].push_back(static_cast<int>(i));
  out += "<g id=\"tree\">\n";
  for (const auto& [depth, ids] : by_depth) {
    appendf(out, "<g id=\"gen-%d\">\n", depth);
    for (int id : ids) {
      const HullNode& node = tree.nodes[id];
      append_polyline(out, m, node.hull, depth_color(depth), node.label == Label::kBad);
    }
    out += "</g>\n";
  }
  out += "</g>\n";

  // The curve itself: boundaries black, chords blue, bridges red.
  out += "<g id=\"curve\" stroke-width=\"1.6\" fill=\"none\">\n";
  for (const CurvePiece& piece : curve.segments) {
    const char* color = piece.kind == PieceKind::kBoundary
                            ? "#000000"
                            : (piece.kind == PieceKind::kChord ? "#0050c8" : "#c80000");
    appendf(out, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\"/>\n",
            m.x(piece.seg.p.x), m.y(piece.seg.p.y), m.x(piece.seg.q.x), m.y(piece.seg.q.y), color);
  }
  for (const Point& p : curve.isolated_points)
    appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"#000000\"/>\n", m.x(p.x),
            m.y(p.y));
  out += "</g>\n";

  // Input points on top.
  out += "<g id=\"points\" fill=\"#202020\">\n";
  for (const Point& p : e.points())
    appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.8\"/>\n", m.x(p.x), m.y(p.y));
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace maxdist
