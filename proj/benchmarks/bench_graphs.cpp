#include <benchmark/benchmark.h>

#include "endograph/builders.hpp"
#include "endograph/catalog.hpp"
#include "endograph/verifier.hpp"

using namespace endograph;

static void BM_BuildEndoGraphZ48(benchmark::State& state) {
  auto g = make_cyclic(48);
  for (auto _ : state) {
    auto graph = build_endo_graph(g);
    benchmark::DoNotOptimize(graph);
  }
}
BENCHMARK(BM_BuildEndoGraphZ48);

static void BM_MaximalCliquesEndoZ60(benchmark::State& state) {
  auto graph = build_endo_graph(make_cyclic(60));
  for (auto _ : state) {
    auto cliques = maximal_cliques(graph);
    benchmark::DoNotOptimize(cliques);
  }
}
BENCHMARK(BM_MaximalCliquesEndoZ60);

static void BM_PlanarityEndoS4(benchmark::State& state) {
  auto graph = build_endo_graph(make_symmetric(4));
  for (auto _ : state) {
    bool planar = is_planar(graph);
    benchmark::DoNotOptimize(planar);
  }
}
BENCHMARK(BM_PlanarityEndoS4);

static void BM_DigraphIsomorphismOrder12(benchmark::State& state) {
  auto a = build_endo_digraph(make_cyclic(12));
  auto b = build_endo_digraph(make_abelian(std::vector<long>{2, 2, 3}));
  for (auto _ : state) {
    bool iso = digraphs_isomorphic(a, b);
    benchmark::DoNotOptimize(iso);
  }
}
BENCHMARK(BM_DigraphIsomorphismOrder12);

static void BM_HuntCatalog(benchmark::State& state) {
  for (auto _ : state) {
    auto findings = hunt_catalog(15);
    benchmark::DoNotOptimize(findings);
  }
}
BENCHMARK(BM_HuntCatalog);

static void BM_VerifySuiteSmall(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.catalog_max = 12;
  cfg.cyclic_max = 12;
  cfg.formula_max = 12;
  cfg.abelian_enum_max = 12;
  cfg.abelian_fast_max = 16;
  cfg.oracle_cross_max = 12;
  for (auto _ : state) {
    auto report = run_all(cfg);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifySuiteSmall);

BENCHMARK_MAIN();
