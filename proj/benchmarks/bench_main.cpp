#include <benchmark/benchmark.h>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/folding.hpp"
#include "foldtrack/metric.hpp"
#include "foldtrack/random.hpp"
#include "foldtrack/spectra.hpp"

using namespace foldtrack;

static void BM_Factorize(benchmark::State& state) {
  CounterRng rng(1, 0);
  Automorphism phi = random_nielsen(3, static_cast<int>(state.range(0)), rng);
  GraphMap f = rose_representative(phi);
  for (auto _ : state) {
    auto fact = factorize(f);
    benchmark::DoNotOptimize(controlled_inverse(fact));
  }
}
BENCHMARK(BM_Factorize)->Arg(4)->Arg(12)->Arg(24);

static void BM_PfValue(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, (i + 1) % n) = 1;
    m(i, (i * 3 + 2) % n) += 2;
  }
  for (auto _ : state) benchmark::DoNotOptimize(pf_value(m));
}
BENCHMARK(BM_PfValue)->Arg(3)->Arg(8)->Arg(16);

static void BM_WordGrowth(benchmark::State& state) {
  Automorphism phi = parse_automorphism("a->ac, b->a, c->b");
  GrowthOptions opt;
  opt.k_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(word_growth_rate(phi, {}, opt));
}
BENCHMARK(BM_WordGrowth)->Arg(20)->Arg(40);

static void BM_TwistEstimate(benchmark::State& state) {
  TwistMember t = twist_member(2, state.range(0));
  GraphPtr g0 = make_rose(2);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_d(g0, t.graph, Automorphism::identity(2)));
}
BENCHMARK(BM_TwistEstimate)->Arg(1000)->Arg(1000000);

BENCHMARK_MAIN();
