#include <benchmark/benchmark.h>

#include "maxdist/certify.hpp"
#include "maxdist/io.hpp"

using namespace maxdist;

namespace {

const PointSet& koch3() {
  static const PointSet e(gen_koch(3));
  return e;
}

const PointSet& random200() {
  static const PointSet e(gen_random_uniform(200, 0));
  return e;
}

void bm_beta_of_cube(benchmark::State& state) {
  const PointSet& e = random200();
  const std::vector<DyadicCube> cubes = enumerate_cubes(e, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    const BetaResult b = beta_of_cube(e, cubes[i++ % cubes.size()], Region::k3Q);
    benchmark::DoNotOptimize(b.beta);
  }
}
BENCHMARK(bm_beta_of_cube);

void bm_truncated_sum_q(benchmark::State& state) {
  const PointSet& e = random200();
  for (auto _ : state) {
    const SumReport rep = truncated_square_sum(e, 0.05, Region::kQ);
    benchmark::DoNotOptimize(rep.total);
  }
}
BENCHMARK(bm_truncated_sum_q)->Unit(benchmark::kMillisecond);

void bm_truncated_sum_3q(benchmark::State& state) {
  const PointSet& e = random200();
  for (auto _ : state) {
    const SumReport rep = truncated_square_sum(e, 0.05, Region::k3Q);
    benchmark::DoNotOptimize(rep.total);
  }
}
BENCHMARK(bm_truncated_sum_3q)->Unit(benchmark::kMillisecond);

void bm_classical_sum(benchmark::State& state) {
  const PointSet& e = koch3();
  for (auto _ : state) {
    const SumReport rep = classical_jones_sum(e);
    benchmark::DoNotOptimize(rep.total);
  }
}
BENCHMARK(bm_classical_sum)->Unit(benchmark::kMillisecond);

void bm_build_and_assemble(benchmark::State& state) {
  const PointSet& e = koch3();
  for (auto _ : state) {
    BetaCache cache;
    const HullTree tree = build_tree(e, 0.05, cache);
    const Assembly a = assemble(tree, e);
    benchmark::DoNotOptimize(a.curve.segments.size());
  }
}
BENCHMARK(bm_build_and_assemble)->Unit(benchmark::kMillisecond);

void bm_evaluate_bounds(benchmark::State& state) {
  const PointSet& e = random200();
  EvalOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const PipelineResult res = evaluate_bounds(e, 0.05, opts);
    benchmark::DoNotOptimize(res.report.lower);
  }
}
BENCHMARK(bm_evaluate_bounds)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_coverage_check(benchmark::State& state) {
  const PointSet& e = random200();
  const PipelineResult res = evaluate_bounds(e, 0.05);
  for (auto _ : state) {
    const CoverageResult cov = coverage_check(e, res.curve, 0.05, 1e-9);
    benchmark::DoNotOptimize(cov.worst_residual);
  }
}
BENCHMARK(bm_coverage_check)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
