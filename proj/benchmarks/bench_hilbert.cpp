#include <benchmark/benchmark.h>

#include "ciw/decider.hpp"
#include "ciw/hilbert.hpp"

namespace {

using namespace ciw;

void BM_HfCi(benchmark::State& state) {
  const DegreeTuple w{5, 12, 13, 28};
  std::int64_t d = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hf_ci(w, d));
    d = (d + 1) % 60;
  }
}
BENCHMARK(BM_HfCi);

void BM_Margin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nonexistence_margin(5, 12, 13, 41));
}
BENCHMARK(BM_Margin);

void BM_ClassifyGrid(benchmark::State& state) {
  const auto bound = state.range(0);
  for (auto _ : state) {
    int exists = 0;
    for (std::int64_t d = 2; d <= bound; ++d)
      for (std::int64_t a = 1; a < d; ++a)
        for (std::int64_t b = a; b < d; ++b)
          for (std::int64_t c = b; c < d; ++c) exists += classify({a, b, c, d}).verdict == Verdict::Exists;
    benchmark::DoNotOptimize(exists);
  }
}
BENCHMARK(BM_ClassifyGrid)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
