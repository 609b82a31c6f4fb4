#include <benchmark/benchmark.h>

#include "grothpd/pipe_dream.hpp"
#include "grothpd/reduction.hpp"
#include "grothpd/spec_cache.hpp"
#include "grothpd/special.hpp"

using namespace grothpd;

namespace {

void BM_EnumerateRpdOneThenDescending(benchmark::State& state) {
  // 1 n n-1 ... 2 has many reduced dreams.
  const int n = static_cast<int>(state.range(0));
  std::vector<int> v{1};
  for (int k = n; k >= 2; --k) v.push_back(k);
  const Permutation w(v);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rpd(w));
}
BENCHMARK(BM_EnumerateRpdOneThenDescending)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

void BM_UpsilonAllOfS(benchmark::State& state) {
  const auto perms = all_permutations(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& w : perms) benchmark::DoNotOptimize(upsilon_beta(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(perms.size()));
}
BENCHMARK(BM_UpsilonAllOfS)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_UpsilonDividedDifferences(benchmark::State& state) {
  const Permutation w({2, 1, 6, 5, 4, 3});
  for (auto _ : state) benchmark::DoNotOptimize(upsilon_beta(w, UpsilonMethod::DividedDifferences));
}
BENCHMARK(BM_UpsilonDividedDifferences);

void BM_ReduceToCore(benchmark::State& state) {
  const auto dreams = enumerate_mrpd(Permutation({2, 1, 5, 4, 3, 6}));
  for (auto _ : state)
    for (const auto& p : dreams) benchmark::DoNotOptimize(reduce_to_core(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(dreams.size()));
}
BENCHMARK(BM_ReduceToCore);

void BM_CPolySweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = all_permutations(n);
  for (auto _ : state) {
    SpecCache cache;
    cache.prefill(n);
    for (const auto& w : perms) benchmark::DoNotOptimize(c_poly(w, CMethod::InclusionExclusion, &cache));
  }
}
BENCHMARK(BM_CPolySweep)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
