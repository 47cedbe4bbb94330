#include <benchmark/benchmark.h>

#include "tilinglab/absorbing/template_graph.hpp"
#include "tilinglab/cliques.hpp"
#include "tilinglab/exact_factor.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/invariants.hpp"
#include "tilinglab/pipeline.hpp"

using namespace tilinglab;

static void BM_ExactFactorK3(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.6, 11);
  const Pattern k3 = Pattern::clique(3);
  for (auto _ : state) benchmark::DoNotOptimize(find_factor_exact(g, k3));
}
BENCHMARK(BM_ExactFactorK3)->Arg(12)->Arg(18)->Arg(24)->Arg(30);

static void BM_ExactFactorNone(benchmark::State& state) {
  const Graph g = gen_two_cliques(static_cast<std::size_t>(state.range(0)));
  const Pattern k3 = Pattern::clique(3);
  for (auto _ : state) benchmark::DoNotOptimize(find_factor_exact(g, k3));
}
BENCHMARK(BM_ExactFactorNone)->Arg(12)->Arg(18)->Arg(24);

static void BM_AlphaEll(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 3);
  const auto ell = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_ell(g, ell));
}
BENCHMARK(BM_AlphaEll)->Args({40, 2})->Args({60, 2})->Args({40, 3})->Args({60, 3});

static void BM_CountCliques(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.7, 5);
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, 4));
}
BENCHMARK(BM_CountCliques)->Arg(60)->Arg(120);

static void BM_TemplateSampled(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_template(m, 0.1, TemplateMode::random_regular, 2, TemplateVerify::sampled(200, 3)));
  }
}
BENCHMARK(BM_TemplateSampled)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_PipelineClique(benchmark::State& state) {
  const Graph g = gen_gnp(120, 0.7, 14);
  PipelineConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(find_factor_absorbing(g, Pattern::clique(3), config, 2));
}
BENCHMARK(BM_PipelineClique)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
