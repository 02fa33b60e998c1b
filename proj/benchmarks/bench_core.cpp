#include <benchmark/benchmark.h>

#include "hs/corpus.hpp"
#include "hs/domains.hpp"
#include "hs/extremals.hpp"
#include "hs/functionals.hpp"
#include "hs/quadrature.hpp"
#include "hs/special.hpp"

using namespace hs;

static void BM_Gamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_fn(x));
    x += 1e-9;  // defeat caching without leaving the argument range
  }
}
BENCHMARK(BM_Gamma);

static void BM_SharpConstants(benchmark::State& state) {
  int n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sharp_mu_star(n, 1.0));
    benchmark::DoNotOptimize(sharp_mu_star(n, 2.0));
    n = n % 8 + 1;
  }
}
BENCHMARK(BM_SharpConstants);

static void BM_BuildGridHalfspace(benchmark::State& state) {
  int res = static_cast<int>(state.range(0));
  Domain half = Domain::half_space(3);
  Params p = Params::make(2, 2.0, 1.0);
  GridOptions go;
  go.reduction = GridReduction::meridian2d;
  for (auto _ : state) {
    QuadratureGrid g = build_grid(half, p, res, kAutoTruncation, go);
    benchmark::DoNotOptimize(g.weights.data());
  }
  state.SetComplexityN(res);
}
BENCHMARK(BM_BuildGridHalfspace)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_BuildGridAnnulus(benchmark::State& state) {
  int res = static_cast<int>(state.range(0));
  Domain ann = Domain::annulus(zeros(3), 1.0, 8.0);
  Params p = Params::make(2, 2.0, 1.0);
  for (auto _ : state) {
    QuadratureGrid g = build_grid(ann, p, res);
    benchmark::DoNotOptimize(g.weights.data());
  }
}
BENCHMARK(BM_BuildGridAnnulus)->Arg(64)->Arg(256);

static void BM_RayleighExtremal(benchmark::State& state) {
  int res = static_cast<int>(state.range(0));
  Domain half = Domain::half_space(3);
  Params p = Params::make(2, 2.0, 1.0);
  GridOptions go;
  go.reduction = GridReduction::meridian2d;
  QuadratureGrid g = build_grid(half, p, res, kAutoTruncation, go);
  ExtremalParams ep;
  TestFunction u = make_extremal(ExtremalFamily::beta1_u, ep, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(rayleigh_on_grid(u, half, p, g).J);
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_RayleighExtremal)->Arg(64)->Arg(128)->Arg(256);

static void BM_RayleighCorpus(benchmark::State& state) {
  Domain half = Domain::half_space(3);
  Params p = Params::make(2, 2.0, 1.0);
  GridOptions go;
  go.reduction = GridReduction::meridian2d;
  QuadratureGrid g = build_grid(half, p, 128, kAutoTruncation, go);
  auto corpus = make_corpus(2, 42, 8);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rayleigh_on_grid(corpus[i], half, p, g).J);
    i = (i + 1) % corpus.size();
  }
}
BENCHMARK(BM_RayleighCorpus);

BENCHMARK_MAIN();
