// End-to-end acceptance runs: exact small cases, oracle comparisons, the
// generated corpus with every runtime check, truncation monotonicity, and
// byte-level determinism. Prints one PASS/FAIL line per criterion and exits
// nonzero if any failed.

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "maxdist/certify.hpp"
#include "maxdist/io.hpp"
#include "oracles.hpp"

using namespace maxdist;

namespace {

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Criterion>& results() {
  static std::vector<Criterion> r;
  return r;
}

void record(const std::string& name, bool pass, const std::string& detail) {
  results().push_back({name, pass, detail});
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct CorpusRun {
  std::string label;
  double r = 0.0;
  BoundsReport report;
};

// ---------------------------------------------------------------- criteria

void two_point_exact() {
  const PointSet e({{0, 0}, {1, 0}});
  const PipelineResult res = evaluate_bounds(e, 0.2);
  const double lower_err = std::abs(res.report.lower - 0.6);
  const double len_err = std::abs(res.report.curve_length - 1.0);
  const bool pass = lower_err <= 1e-12 && len_err <= 1e-12 && res.report.all_pass();
  record("two-point-exact", pass,
         "lower err " + fmt(lower_err) + ", length err " + fmt(len_err));
}

void collinear_line() {
  std::vector<Point> pts;
  const Point a{0.137, 0.241}, b{0.912, 0.803};
  for (int i = 0; i < 100; ++i) {
    const double t = static_cast<double>(i) / 99.0;
    pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  const PointSet e(pts);
  const double len = dist(a, b);
  const PipelineResult res = evaluate_bounds(e, 0.1 * len);
  const bool zero_sums =
      res.report.truncated_sum_q == 0.0 && res.report.truncated_sum_3q == 0.0;
  const double lower_err = std::abs(res.report.lower - 0.8 * len);
  const double len_err = std::abs(res.report.curve_length - len);
  const bool pass =
      zero_sums && lower_err <= 1e-9 && len_err <= 1e-9 && res.report.all_pass();
  record("collinear-line", pass,
         std::string("sums ") + (zero_sums ? "exactly 0" : "nonzero") + ", lower err " +
             fmt(lower_err) + ", length err " + fmt(len_err));
}

void beta_against_oracle() {
  double worst = 0.0;
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PointSet e(gen_random_uniform(20, seed));
    std::vector<DyadicCube> picks;
    for (int n = 1; n <= 5; ++n) {
      const std::vector<DyadicCube> cubes = enumerate_cubes(e, n);
      if (cubes.empty()) continue;
      picks.push_back(cubes.front());
      picks.push_back(cubes[cubes.size() / 2]);
    }
    for (const DyadicCube& q : picks) {
      for (const Region region : {Region::kQ, Region::k3Q}) {
        const BetaResult got = beta_of_cube(e, q, region);
        const double want = oracle::region_half_width(e, q, region);
        worst = std::max(worst, std::abs(got.r_value - want));
        worst = std::max(worst,
                         std::abs(got.beta - want / region_diam(q, region)));
        ++compared;
      }
    }
  }
  record("beta-oracle", worst <= 1e-9,
         std::to_string(compared) + " cubes, worst gap " + fmt(worst));
}

std::vector<CorpusRun> run_corpus() {
  std::vector<std::pair<std::string, PointSet>> inputs;
  inputs.emplace_back("koch2", PointSet(gen_koch(2)));
  inputs.emplace_back("koch3", PointSet(gen_koch(3)));
  inputs.emplace_back("koch4", PointSet(gen_koch(4)));
  inputs.emplace_back("dust2", PointSet(gen_cantor_dust(2)));
  inputs.emplace_back("dust3", PointSet(gen_cantor_dust(3)));
  inputs.emplace_back("circle64", PointSet(gen_circle(64)));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    inputs.emplace_back("random200-" + std::to_string(seed),
                        PointSet(gen_random_uniform(200, seed)));

  std::vector<CorpusRun> runs;
  for (const auto& [label, e] : inputs) {
    for (const double r : {0.2, 0.05, 0.01}) {
      CorpusRun run;
      run.label = label;
      run.r = r;
      run.report = evaluate_bounds(e, r).report;
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

void corpus_check(const std::vector<CorpusRun>& runs, const std::string& criterion,
                  const std::vector<std::string>& check_names) {
  bool pass = true;
  double worst = -std::numeric_limits<double>::infinity();
  std::string worst_at = "-";
  for (const CorpusRun& run : runs) {
    for (const std::string& name : check_names) {
      const auto it = run.report.checks.find(name);
      if (it == run.report.checks.end()) {
        pass = false;
        worst_at = run.label + " missing " + name;
        continue;
      }
      pass = pass && it->second.pass;
      if (it->second.residual > worst) {
        worst = it->second.residual;
        worst_at = run.label + " r=" + fmt(run.r);
      }
    }
  }
  record(criterion, pass,
         std::to_string(runs.size()) + " runs, worst residual " + fmt(worst) + " (" +
             worst_at + ")");
}

void monotone_truncation() {
  const PointSet e(gen_koch(3));
  bool sums_monotone = true, lowers_monotone = true;
  double prev_sum = -1.0, prev_lower = -std::numeric_limits<double>::infinity();
  SumReport finest;
  for (int k = 1; k <= 7; ++k) {
    const double r = std::ldexp(1.0, -k);
    const SumReport sum = truncated_square_sum(e, r, Region::kQ);
    const LowerBound lb = lower_bound(e, r, Region::kQ);
    // r shrinks along the sweep, so sums and lower bounds may only grow
    sums_monotone = sums_monotone && sum.total >= prev_sum - 1e-12;
    lowers_monotone = lowers_monotone && lb.value >= prev_lower - 1e-12;
    prev_sum = sum.total;
    prev_lower = lb.value;
    if (k == 7) finest = truncated_square_sum(e, r, Region::k3Q);
  }
  const SumReport classical = classical_jones_sum(e);
  const double slack = classical.total + classical.upward_truncation_bound +
                       finest.upward_truncation_bound + 1e-12 - finest.total;
  const bool pass = sums_monotone && lowers_monotone && slack >= 0.0;
  record("monotone-truncation", pass,
         std::string(sums_monotone ? "sums ok" : "sums NOT monotone") + ", " +
             (lowers_monotone ? "lower bounds ok" : "lower bounds NOT monotone") +
             ", classical slack " + fmt(slack));
}

void bound_vs_curve(const std::vector<CorpusRun>& runs) {
  bool pass = true;
  double worst_gap = -std::numeric_limits<double>::infinity();
  std::string worst_at = "-";
  for (const CorpusRun& run : runs) {
    const double gap = run.report.lower - (run.report.curve_length + 2.0 * run.r);
    if (gap > worst_gap) {
      worst_gap = gap;
      worst_at = run.label + " r=" + fmt(run.r);
    }
    pass = pass && gap <= 1e-9;
    const auto chain = run.report.checks.find("length_chain");
    pass = pass && chain != run.report.checks.end() && chain->second.pass;
  }
  record("bound-vs-curve", pass,
         "worst lower-(length+2r) gap " + fmt(worst_gap) + " (" + worst_at + ")");
}

void determinism() {
  bool pass = true;
  std::string detail = "byte-identical";
  for (const std::string& label : {std::string("koch3"), std::string("random200")}) {
    const PointSet e =
        label == "koch3" ? PointSet(gen_koch(3)) : PointSet(gen_random_uniform(200, 0));
    EvalOptions serial;
    serial.threads = 1;
    EvalOptions parallel;
    parallel.threads = 4;
    const PipelineResult a = evaluate_bounds(e, 0.05, serial);
    const PipelineResult b = evaluate_bounds(e, 0.05, serial);
    const PipelineResult c = evaluate_bounds(e, 0.05, parallel);
    const std::string ja = report_to_json(a.report).dump();
    if (ja != report_to_json(b.report).dump() || ja != report_to_json(c.report).dump() ||
        curve_to_json(a.curve, 0.05).dump() != curve_to_json(c.curve, 0.05).dump()) {
      pass = false;
      detail = "mismatch on " + label;
      break;
    }
  }
  record("determinism", pass, detail);
}

}  // namespace

int main() {
  try {
    two_point_exact();
    collinear_line();
    beta_against_oracle();

    const std::vector<CorpusRun> runs = run_corpus();
    corpus_check(runs, "corpus-coverage", {"coverage", "connectivity"});
    corpus_check(runs, "corpus-split-length", {"K_split"});
    corpus_check(runs, "corpus-seven-diameters", {"seven_bound"});
    corpus_check(runs, "corpus-area-sandwich", {"area_sandwich"});
    corpus_check(runs, "corpus-telescoping", {"telescoping"});
    corpus_check(runs, "corpus-cube-sums", {"lemma_288M"});
    corpus_check(runs, "corpus-multiplicity", {"multiplicity", "diameter_halving"});
    corpus_check(runs, "corpus-termination", {"termination"});

    monotone_truncation();
    bound_vs_curve(runs);
    determinism();
  } catch (const std::exception& e) {
    record("unexpected-exception", false, e.what());
  }

  int failures = 0;
  for (const Criterion& c : results()) {
    std::printf("%s  %-24s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
    failures += c.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results().size()) - failures,
              results().size());
  return failures == 0 ? 0 : 1;
}
