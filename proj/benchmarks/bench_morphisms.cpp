#include <benchmark/benchmark.h>

#include "endograph/catalog.hpp"
#include "endograph/morphism.hpp"

using namespace endograph;

static void BM_EnumerateEndosCyclic60(benchmark::State& state) {
  auto g = make_cyclic(60);
  for (auto _ : state) {
    auto monoid = enumerate_endomorphisms(g);
    benchmark::DoNotOptimize(monoid);
  }
}
BENCHMARK(BM_EnumerateEndosCyclic60);

static void BM_EnumerateEndosElementaryAbelian16(benchmark::State& state) {
  auto g = make_abelian(std::vector<long>{2, 2, 2, 2});
  for (auto _ : state) {
    auto monoid = enumerate_endomorphisms(g);
    benchmark::DoNotOptimize(monoid);
  }
}
BENCHMARK(BM_EnumerateEndosElementaryAbelian16);

static void BM_EnumerateEndosQuaternion(benchmark::State& state) {
  auto g = make_quaternion();
  for (auto _ : state) {
    auto monoid = enumerate_endomorphisms(g);
    benchmark::DoNotOptimize(monoid);
  }
}
BENCHMARK(BM_EnumerateEndosQuaternion);

static void BM_EnumerateAutosSymmetric4(benchmark::State& state) {
  auto g = make_symmetric(4);
  for (auto _ : state) {
    auto autos = enumerate_automorphisms(g);
    benchmark::DoNotOptimize(autos);
  }
}
BENCHMARK(BM_EnumerateAutosSymmetric4);

static void BM_FastPathAllPairsZ64(benchmark::State& state) {
  auto g = make_cyclic(64);
  ArcOracle oracle(g, 1, ArcOracle::Strategy::AbelianFastPath);
  for (auto _ : state) {
    long arcs = 0;
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b)
        arcs += oracle.arc(a, b) ? 1 : 0;
    benchmark::DoNotOptimize(arcs);
  }
}
BENCHMARK(BM_FastPathAllPairsZ64);

static void BM_ConstrainedSearchAllPairsS4(benchmark::State& state) {
  auto g = make_symmetric(4);
  for (auto _ : state) {
    ArcOracle oracle(g, 1, ArcOracle::Strategy::ConstrainedSearch);
    long arcs = 0;
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b)
        arcs += oracle.arc(a, b) ? 1 : 0;
    benchmark::DoNotOptimize(arcs);
  }
}
BENCHMARK(BM_ConstrainedSearchAllPairsS4);
