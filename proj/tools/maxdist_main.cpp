// Command line front end: generate sample sets, compute bound reports,
// build and verify covering curves, and render SVG figures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "maxdist/io.hpp"
#include "maxdist/svg.hpp"

namespace {

using namespace maxdist;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

// Loads the CSV, reports dropped duplicates, and (opt-in) normalizes the set
// into the unit square, rescaling r to match.
PointSet load_points(const std::string& path, bool normalize, double* r) {
  PointSet e = parse_points_file(path);
  if (e.duplicates_removed() > 0)
    std::cerr << "note: removed " << e.duplicates_removed() << " duplicate point(s)\n";
  if (normalize) {
    const Transform t = normalize_transform(e);
    if (t.scale != 1.0 || t.shift.x != 0.0 || t.shift.y != 0.0) {
      e = apply_transform(e, t);
      if (r) {
        std::cerr << "note: normalized (scale " << t.scale << "); r " << *r << " -> "
                  << *r * t.scale << "\n";
        *r *= t.scale;
      }
    }
  }
  return e;
}

int report_failures(const BoundsReport& rep) {
  int failures = 0;
  for (const auto& [name, check] : rep.checks) {
    if (check.pass) continue;
    std::cerr << "check failed: " << name << " (residual " << check.residual << ")\n";
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}

int run_gen(const std::string& kind, int level, int n, std::uint64_t seed,
            const std::string& out) {
  std::vector<Point> pts;
  if (kind == "koch") {
    pts = gen_koch(level);
  } else if (kind == "cantor_dust") {
    pts = gen_cantor_dust(level);
  } else if (kind == "circle") {
    pts = gen_circle(n);
  } else if (kind == "random_uniform") {
    pts = gen_random_uniform(n, seed);
  } else if (kind == "grid") {
    pts = gen_grid(n);
  } else {
    std::cerr << "unknown generator '" << kind
              << "' (expected koch, cantor_dust, circle, random_uniform, grid)\n";
    return 2;
  }
  std::ostringstream csv;
  write_points_csv(csv, pts);
  write_text(out, csv.str());
  return 0;
}

int run_bounds(const std::string& input, double r, bool classical, const std::string& variant,
               double eps_top, bool normalize, int threads, const std::string& out) {
  if (!classical && r <= 0.0) {
    std::cerr << "bounds needs --r > 0; for the r = 0 dyadic sum pass --classical\n";
    return 2;
  }
  PointSet e = load_points(input, normalize, &r);
  SumOptions opts;
  opts.eps_top = eps_top;
  opts.threads = threads;
  JsonObject doc;
  doc["schema"] = 1;
  doc["diameter"] = e.diameter();
  if (classical) {
    doc["classical"] = true;
    doc["sum"] = sum_to_json(classical_jones_sum(e, opts));
  } else {
    const Region region = variant == "3q" ? Region::k3Q : Region::kQ;
    const LowerBound lb = lower_bound(e, r, region, opts);
    doc["r"] = r;
    doc["variant"] = region_name(region);
    doc["lower"] = lb.value;
    doc["point_minimizer"] = lb.point_minimizer;
    doc["sum"] = sum_to_json(lb.sum);
  }
  write_text(out, JsonValue(std::move(doc)).dump() + "\n");
  return 0;
}

int run_curve(const std::string& input, double r, const std::string& variant, double eps_top,
              bool normalize, bool snapshots, int threads, const std::string& out,
              const std::string& curve_out, const std::string& svg_out) {
  if (r <= 0.0) {
    std::cerr << "curve needs --r > 0 (the construction does not terminate at r = 0)\n";
    return 2;
  }
  PointSet e = load_points(input, normalize, &r);
  EvalOptions opts;
  opts.variant = variant == "3q" ? Region::k3Q : Region::kQ;
  opts.eps_top = eps_top;
  opts.threads = threads;
  opts.snapshots = snapshots && !svg_out.empty();
  PipelineResult res = evaluate_bounds(e, r, opts);
  write_text(out, report_to_json(res.report).dump() + "\n");
  if (!curve_out.empty()) write_text(curve_out, curve_to_json(res.curve, r).dump() + "\n");
  if (!svg_out.empty()) {
    write_text(svg_out, render_svg(e, res.tree, res.curve, r));
    const auto dot = svg_out.rfind('.');
    const std::string stem = dot == std::string::npos ? svg_out : svg_out.substr(0, dot);
    for (std::size_t j = 0; j < res.trace.snapshots.size(); ++j)
      write_text(stem + "-gen" + std::to_string(j) + ".svg",
                 render_svg(e, res.tree, res.trace.snapshots[j], r));
  }
  return report_failures(res.report);
}

int run_verify(const std::string& input, const std::string& curve_path, double r_override,
               bool normalize, int threads, const std::string& out) {
  std::ifstream in(curve_path);
  if (!in) throw std::runtime_error("cannot open '" + curve_path + "'");
  double r = 0.0;
  const Curve curve = curve_from_json(in, &r);
  if (r_override > 0.0) r = r_override;
  if (r <= 0.0) throw std::runtime_error("curve file carries no radius; pass --r");
  const PointSet e = load_points(input, normalize, nullptr);
  const double tol = 1e-9 * std::max(1.0, e.diameter());

  const CoverageResult cov = coverage_check(e, curve, r, tol, threads);
  const ConnectivityResult con = connectivity_check(curve, tol);
  JsonObject doc;
  doc["schema"] = 1;
  doc["r"] = r;
  doc["curve_length"] = curve_length(curve, tol);
  doc["coverage"] = JsonObject{{"pass", cov.ok}, {"residual", cov.worst_residual}};
  doc["connectivity"] =
      JsonObject{{"pass", con.ok}, {"components", con.components}, {"elements", con.elements}};
  write_text(out, JsonValue(std::move(doc)).dump() + "\n");
  int failures = 0;
  if (!cov.ok) {
    std::cerr << "check failed: coverage (residual " << cov.worst_residual << ")\n";
    ++failures;
  }
  if (!con.ok) {
    std::cerr << "check failed: connectivity (" << con.components << " components)\n";
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}

int run_svg(const std::string& input, double r, const std::string& variant, bool normalize,
            int threads, const std::string& out) {
  if (r <= 0.0) {
    std::cerr << "svg needs --r > 0\n";
    return 2;
  }
  PointSet e = load_points(input, normalize, &r);
  EvalOptions opts;
  opts.variant = variant == "3q" ? Region::k3Q : Region::kQ;
  opts.threads = threads;
  PipelineResult res = evaluate_bounds(e, r, opts);
  write_text(out, render_svg(e, res.tree, res.curve, r));
  return report_failures(res.report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Covering curves for planar point sets: dyadic square sums, certified "
      "lower bounds, and the hull-splitting curve construction"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a sample point set as CSV");
  std::string gen_kind;
  int gen_level = 2, gen_n = 64;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "koch | cantor_dust | circle | random_uniform | grid")
      ->required();
  gen->add_option("--level", gen_level, "recursion depth (koch, cantor_dust)");
  gen->add_option("--n", gen_n, "point count (circle, random_uniform) or grid side");
  gen->add_option("--seed", gen_seed, "RNG seed (random_uniform)");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // shared knobs
  std::string input, variant = "q", out, curve_out, svg_out, curve_path;
  double r = 0.0, eps_top = -1.0, r_override = -1.0;
  bool normalize = false, snapshots = false, classical = false;
  int threads = 1;

  auto add_common = [&](CLI::App* cmd, bool with_r) {
    cmd->add_option("input", input, "point CSV path")->required();
    if (with_r) cmd->add_option("--r", r, "neighborhood radius");
    cmd->add_flag("--normalize", normalize, "center the set in the unit square (rescales r)");
    cmd->add_option("--threads", threads, "worker threads for per-point stages");
    cmd->add_option("--out", out, "output path (default stdout)");
  };

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Truncated square sum and lower bound");
  add_common(bounds, true);
  bounds->add_option("--variant", variant, "which beta region feeds the sum")
      ->check(CLI::IsMember({"q", "3q"}));
  bounds->add_option("--eps-top", eps_top, "upward truncation tail target");
  bounds->add_flag("--classical", classical, "compute the r = 0 dyadic sum instead");

  // curve
  auto* curve = app.add_subcommand("curve", "Full pipeline: bounds, curve, checks");
  add_common(curve, true);
  curve->add_option("--variant", variant, "which beta region feeds the lower bound")
      ->check(CLI::IsMember({"q", "3q"}));
  curve->add_option("--eps-top", eps_top, "upward truncation tail target");
  curve->add_flag("--snapshots", snapshots, "with --svg-out, also render per-generation views");
  curve->add_option("--curve-out", curve_out, "write the curve as JSON");
  curve->add_option("--svg-out", svg_out, "render the run as SVG");

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a serialized curve against a point set");
  add_common(verify, false);
  verify->add_option("--curve", curve_path, "curve JSON produced by `curve --curve-out`")
      ->required();
  verify->add_option("--r", r_override, "override the radius stored in the curve file");

  // svg
  auto* svg = app.add_subcommand("svg", "Render points, hull tree, curve, and r-disks");
  add_common(svg, true);
  svg->add_option("--variant", variant, "which beta region feeds the lower bound")
      ->check(CLI::IsMember({"q", "3q"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_kind, gen_level, gen_n, gen_seed, gen_out);
    if (bounds->parsed())
      return run_bounds(input, r, classical, variant, eps_top, normalize, threads, out);
    if (curve->parsed())
      return run_curve(input, r, variant, eps_top, normalize, snapshots, threads, out, curve_out,
                       svg_out);
    if (verify->parsed())
      return run_verify(input, curve_path, r_override, normalize, threads, out);
    if (svg->parsed()) return run_svg(input, r, variant, normalize, threads, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
