#include <benchmark/benchmark.h>

#include <random>

#include "hexchain/hexchain.hpp"

namespace {

hexchain::CodeWord random_code(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<hexchain::Letter> letters(static_cast<std::size_t>(std::max(0, n - 2)));
  for (auto& x : letters) x = hexchain::kAllLetters[static_cast<std::size_t>(pick(rng))];
  return hexchain::CodeWord(std::move(letters), n);
}

void BM_ClosedForm(benchmark::State& state) {
  const auto code = random_code(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hexchain::wiener_closed(hexchain::ChainKind::Spiro, code));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(10)->Range(10, 100000)->Complexity(benchmark::oN);

void BM_Recurrence(benchmark::State& state) {
  const auto code = random_code(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hexchain::wiener_recurrence(hexchain::ChainKind::Spiro, code));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Recurrence)->RangeMultiplier(10)->Range(10, 100000)->Complexity(benchmark::oN);

void BM_Bfs(benchmark::State& state) {
  const auto graph = hexchain::build_spiro(random_code(static_cast<int>(state.range(0)), 42));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hexchain::wiener_bfs(graph));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bfs)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hexchain::enumerate_chains(n));
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
