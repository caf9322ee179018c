#include <benchmark/benchmark.h>

#include <random>

#include "ciw/dense_matrix.hpp"
#include "ciw/witness.hpp"

namespace {

using namespace ciw;

void BM_RankRandomSquare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(1);
  DenseMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng());
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankRandomSquare)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMillisecond);

void BM_QuotientHf(benchmark::State& state) {
  const auto d = state.range(0);
  const PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(2);
  std::vector<HomogeneousForm> forms;
  for (int g : {6, 6, 6, 9, 9, 9}) forms.push_back(random_homogeneous_form(g, f, rng));
  for (auto _ : state) benchmark::DoNotOptimize(quotient_hf_explicit(forms, d));
}
BENCHMARK(BM_QuotientHf)->DenseRange(12, 15)->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  const auto q = CIQuery::make(state.range(0), state.range(1), state.range(2), state.range(3));
  for (auto _ : state) benchmark::DoNotOptimize(ci_witness(q));
}
BENCHMARK(BM_Witness)->Args({6, 6, 6, 15})->Args({6, 8, 9, 20})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
