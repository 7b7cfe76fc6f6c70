#include "maxdist/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace maxdist {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    parse_fail(line_no, "expected a number, got '" + std::string(s) + "'");
  if (!std::isfinite(v)) parse_fail(line_no, "coordinate is not finite");
  return v;
}

}  // namespace

PointSet parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) parse_fail(line_no, "expected 'x,y'");
    const double x = parse_double(trim(s.substr(0, comma)), line_no);
    const double y = parse_double(trim(s.substr(comma + 1)), line_no);
    pts.push_back({x, y});
  }
  if (pts.empty()) throw std::runtime_error("no points found");
  return PointSet(std::move(pts));
}

PointSet parse_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_points(in);
}

void write_points_csv(std::ostream& out, std::span<const Point> pts) {
  char buf[96];
  for (const Point& p : pts) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
    out << buf;
  }
}

std::vector<Point> gen_koch(int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  std::vector<Point> pts{{0.0, 0.0}, {1.0, 0.0}};
  const double c = 0.5, s = std::sqrt(3.0) / 2.0;  // rotate by +60 degrees
  for (int l = 0; l < level; ++l) {
    std::vector<Point> next;
    next.reserve((pts.size() - 1) * 4 + 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Point a = pts[i];
      const Point d = {(pts[i + 1].x - a.x) / 3.0, (pts[i + 1].y - a.y) / 3.0};
      const Point p1 = a + d;
      next.push_back(a);
      next.push_back(p1);
      next.push_back({p1.x + c * d.x - s * d.y, p1.y + s * d.x + c * d.y});
      next.push_back({a.x + 2.0 * d.x, a.y + 2.0 * d.y});
    }
    next.push_back(pts.back());
    pts = std::move(next);
  }
  return pts;
}

std::vector<Point> gen_cantor_dust(int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  std::vector<double> xs{0.0};
  double step = 0.75;
  for (int l = 0; l < level; ++l) {
    std::vector<double> next;
    next.reserve(xs.size() * 2);
    for (double x : xs) {
      next.push_back(x);
      next.push_back(x + step);
    }
    xs = std::move(next);
    step *= 0.25;
  }
  std::vector<Point> pts;
  pts.reserve(xs.size() * xs.size());
  for (double x : xs)
    for (double y : xs) pts.push_back({x, y});
  return pts;
}

std::vector<Point> gen_circle(int n) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  std::vector<Point> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    pts[i] = {0.5 + 0.5 * std::cos(a), 0.5 + 0.5 * std::sin(a)};
  }
  return pts;
}

std::vector<Point> gen_random_uniform(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return std::ldexp(static_cast<double>(rng() >> 11), -53); };
  std::vector<Point> pts(static_cast<std::size_t>(n));
  for (Point& p : pts) {
    p.x = unit();
    p.y = unit();
  }
  return pts;
}

std::vector<Point> gen_grid(int n) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pts.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
  return pts;
}

Transform normalize_transform(const PointSet& e) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const Point& p : e.points()) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  if (lo_x >= 0.0 && lo_y >= 0.0 && hi_x < 1.0 && hi_y < 1.0) return {};
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  Transform t;
  t.scale = span > 0.0 ? 0.875 / span : 1.0;
  t.shift = {0.5 - t.scale * 0.5 * (lo_x + hi_x), 0.5 - t.scale * 0.5 * (lo_y + hi_y)};
  return t;
}

PointSet apply_transform(const PointSet& e, const Transform& t) {
  std::vector<Point> pts;
  pts.reserve(e.size());
  for (const Point& p : e.points()) pts.push_back(t.apply(p));
  return PointSet(std::move(pts));
}

const char* region_name(Region region) { return region == Region::kQ ? "q" : "3q"; }

namespace {

const char* kind_name(PieceKind kind) {
  switch (kind) {
    case PieceKind::kBoundary: return "boundary";
    case PieceKind::kChord: return "chord";
    case PieceKind::kBridge: return "bridge";
  }
  return "boundary";
}

PieceKind kind_from(const std::string& name) {
  if (name == "boundary") return PieceKind::kBoundary;
  if (name == "chord") return PieceKind::kChord;
  if (name == "bridge") return PieceKind::kBridge;
  throw std::runtime_error("unknown segment kind '" + name + "'");
}

JsonArray point_json(const Point& p) { return {p.x, p.y}; }

}  // namespace

JsonValue curve_to_json(const Curve& curve, double r) {
  JsonArray segments;
  segments.reserve(curve.segments.size());
  for (const CurvePiece& piece : curve.segments) {
    JsonObject seg;
    seg["kind"] = kind_name(piece.kind);
    seg["sigma"] = piece.sigma;
    seg["p"] = point_json(piece.seg.p);
    seg["q"] = point_json(piece.seg.q);
    segments.push_back(std::move(seg));
  }
  JsonArray isolated;
  isolated.reserve(curve.isolated_points.size());
  for (const Point& p : curve.isolated_points) isolated.push_back(point_json(p));
  JsonObject doc;
  doc["schema"] = 1;
  doc["r"] = r;
  doc["segments"] = std::move(segments);
  doc["isolated_points"] = std::move(isolated);
  return doc;
}

Curve curve_from_json(std::istream& in, double* r) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", 0) != 1)
    throw std::runtime_error("unknown curve schema");
  auto read_point = [](const nlohmann::json& j) -> Point {
    if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
  };
  Curve curve;
  for (const auto& seg : doc.value("segments", nlohmann::json::array())) {
    CurvePiece piece;
    piece.kind = kind_from(seg.at("kind").get<std::string>());
    piece.sigma = seg.value("sigma", std::string());
    piece.seg.p = read_point(seg.at("p"));
    piece.seg.q = read_point(seg.at("q"));
    curve.segments.push_back(std::move(piece));
  }
  for (const auto& p : doc.value("isolated_points", nlohmann::json::array()))
    curve.isolated_points.push_back(read_point(p));
  if (r) *r = doc.value("r", 0.0);
  return curve;
}

JsonValue sum_to_json(const SumReport& sum) {
  JsonArray per_scale;
  per_scale.reserve(sum.per_scale.size());
  for (const ScaleLine& line : sum.per_scale) {
    JsonObject row;
    row["n"] = line.n;
    row["partial"] = line.partial;
    row["cubes"] = line.cube_count;
    per_scale.push_back(std::move(row));
  }
  JsonObject doc;
  doc["r"] = sum.r;
  doc["variant"] = region_name(sum.variant);
  doc["total"] = sum.total;
  doc["n_top"] = sum.n_top;
  doc["n_bottom"] = sum.n_bottom;
  doc["upward_truncation_bound"] = sum.upward_truncation_bound;
  doc["per_scale"] = std::move(per_scale);
  return doc;
}

JsonValue report_to_json(const BoundsReport& rep) {
  JsonObject checks;
  for (const auto& [name, check] : rep.checks) {
    JsonObject entry;
    entry["pass"] = check.pass;
    entry["residual"] = check.residual;
    checks[name] = std::move(entry);
  }
  JsonObject doc;
  doc["schema"] = 1;
  doc["r"] = rep.r;
  doc["diameter"] = rep.diameter;
  doc["variant"] = region_name(rep.variant);
  doc["lower"] = rep.lower;
  doc["point_minimizer"] = rep.point_minimizer;
  doc["truncated_sum_q"] = rep.truncated_sum_q;
  doc["truncated_sum_3q"] = rep.truncated_sum_3q;
  doc["curve_length"] = rep.curve_length;
  doc["generations"] = rep.generations;
  doc["curve_segments"] = rep.curve_segments;
  doc["curve_isolated"] = rep.curve_isolated;
  doc["overlap_pairs"] = rep.overlap_pairs;
  doc["telescoping_unit_residual"] = rep.telescoping_unit_residual;
  doc["all_pass"] = rep.all_pass();
  doc["checks"] = std::move(checks);
  return doc;
}

}  // namespace maxdist
