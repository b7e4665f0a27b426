#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sepsym/collections.hpp"
#include "sepsym/combi.hpp"
#include "sepsym/cubillage.hpp"

using namespace sepsym;

namespace {

std::vector<ColorSet> random_sets(int n, std::size_t count) {
  std::mt19937_64 gen(42);
  std::vector<ColorSet> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(n, gen() & ColorSet::full(n).bits());
  return out;
}

void BM_WeakSeparation(benchmark::State& state) {
  const auto sets = random_sets(static_cast<int>(state.range(0)), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_weakly_separated(sets[i & 1023], sets[(i * 7 + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_WeakSeparation)->Arg(8)->Arg(32)->Arg(64);

void BM_KSeparation(benchmark::State& state) {
  const auto sets = random_sets(48, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_k_separated(sets[i & 1023], sets[(i * 7 + 3) & 1023], static_cast<int>(state.range(0))));
    ++i;
  }
}
BENCHMARK(BM_KSeparation)->Arg(1)->Arg(3)->Arg(6);

void BM_PairwiseCheck(benchmark::State& state) {
  const auto w = greedy_completion(static_cast<int>(state.range(0)), Relation::weak(), {});
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_separated(w, Relation::weak()));
  state.counters["members"] = static_cast<double>(w.size());
}
BENCHMARK(BM_PairwiseCheck)->Arg(8)->Arg(16)->Arg(22);

void BM_PurityWeak(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(purity_report(n, Relation::weak(), Domain::full(), {threads, 0}));
}
BENCHMARK(BM_PurityWeak)->Args({5, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_PurityChord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(purity_report(n, Relation::chord(), Domain::full(), {1, 0}));
}
BENCHMARK(BM_PurityChord)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ReconstructCombi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = greedy_completion(n, Relation::weak(), {}, 7);
  const auto cfg = make_zonogon_config(n, false);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_ftq_combi(w, cfg));
}
BENCHMARK(BM_ReconstructCombi)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SymmetricCubillage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_symmetric_cubillage(n));
}
BENCHMARK(BM_SymmetricCubillage)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
