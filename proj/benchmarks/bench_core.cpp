#include <benchmark/benchmark.h>

#include "rrgexp/asymmetric.hpp"
#include "rrgexp/entropy.hpp"
#include "rrgexp/pairing.hpp"
#include "rrgexp/symmetric.hpp"

namespace {

void BM_RootZStar(benchmark::State& state) {
  const auto w = rrgexp::SymmetricWeights::for_delta(static_cast<int>(state.range(0)));
  const rrgexp::EntropyProblem p{0.5, 0.9 * state.range(0) / 8.0, w.b};
  for (auto _ : state) benchmark::DoNotOptimize(rrgexp::root_z_star(p));
}
BENCHMARK(BM_RootZStar)->Arg(4)->Arg(6)->Arg(8);

void BM_PhiStar(benchmark::State& state) {
  const auto w = rrgexp::SymmetricWeights::for_delta(static_cast<int>(state.range(0)));
  const rrgexp::EntropyProblem p{0.5, 0.9 * state.range(0) / 8.0, w.b};
  for (auto _ : state)
    benchmark::DoNotOptimize(rrgexp::solve_entropy(p).objective);
}
BENCHMARK(BM_PhiStar)->Arg(4)->Arg(6)->Arg(8);

void BM_HValue(benchmark::State& state) {
  const int delta = static_cast<int>(state.range(0));
  const double gamma = 0.9 * delta / 8.0;
  for (auto _ : state) benchmark::DoNotOptimize(rrgexp::h_value(delta, gamma));
}
BENCHMARK(BM_HValue)->Arg(4)->Arg(6)->Arg(8);

void BM_CellBound(benchmark::State& state) {
  const int delta = static_cast<int>(state.range(0));
  const auto method = state.range(1) == 0 ? rrgexp::CellMethod::corner
                                          : rrgexp::CellMethod::tangent;
  const double a = 0.3, g = 0.3 * delta / 8.0, w = 1e-3;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        rrgexp::cell_upper_bound(delta, a - w, a + w, g - w, g + w, method));
}
BENCHMARK(BM_CellBound)
    ->Args({4, 0})->Args({4, 1})
    ->Args({6, 0})->Args({6, 1})
    ->Args({8, 0})->Args({8, 1});

void BM_SamplePairing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(rrgexp::sample_pairing(n, 4, seed++));
}
BENCHMARK(BM_SamplePairing)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ExactExpansion(benchmark::State& state) {
  const auto g = rrgexp::sample_pairing(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rrgexp::exact_expansion(g));
}
BENCHMARK(BM_ExactExpansion)->Arg(12)->Arg(16)->Arg(20);

void BM_LocalSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = rrgexp::sample_pairing(n, 4, 1);
  const auto order = rrgexp::ScoreOrder::random(n, 2);
  std::vector<int> start(order.pi.begin(), order.pi.begin() + n / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(rrgexp::local_search_expansion(g, order, start));
}
BENCHMARK(BM_LocalSearch)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
