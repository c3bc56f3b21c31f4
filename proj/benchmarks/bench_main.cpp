#include <benchmark/benchmark.h>

#include "hetnet/analytic.hpp"
#include "hetnet/simulation.hpp"

using namespace hetnet;

static void BM_LaplaceZ(benchmark::State& state) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  double s = 1e5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.laplace_z(s, 200.0, 100.0));
    s *= 1.0000001;
  }
}
BENCHMARK(BM_LaplaceZ);

static void BM_JpdfCond(benchmark::State& state) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  double g = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.jpdf_cond(g, 0.3, 200.0, 100.0));
    g *= 1.0000001;
  }
}
BENCHMARK(BM_JpdfCond);

static void BM_CategoryProbabilities(benchmark::State& state) {
  const AnalyticEngine e(RadioParams{}, IcicParams{});
  for (auto _ : state) benchmark::DoNotOptimize(e.category_probabilities());
}
BENCHMARK(BM_CategoryProbabilities)->Unit(benchmark::kMillisecond);

static void BM_NearestNeighbour(benchmark::State& state) {
  const auto pts = gen_ppp(13.8, 15000.0, 1);
  const GridIndex idx(pts);
  const auto queries = gen_ppp(200.0, 5000.0, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(idx.nearest(queries[i]));
    if (++i == queries.size()) i = 0;
  }
}
BENCHMARK(BM_NearestNeighbour);

static void BM_DropNetwork(benchmark::State& state) {
  const SimConfig sim;
  std::size_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(drop_network(RadioParams{}, 0.5, sim, trial++));
}
BENCHMARK(BM_DropNetwork)->Unit(benchmark::kMillisecond);

static void BM_EvaluateDrop(benchmark::State& state) {
  const SimConfig sim;
  const auto d = drop_network(RadioParams{}, 0.5, sim, 0);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(d, IcicParams{}, sim));
}
BENCHMARK(BM_EvaluateDrop)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
