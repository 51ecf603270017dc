#include <benchmark/benchmark.h>

#include "rqd/search.hpp"

namespace {

void BM_beta(benchmark::State& state, bool parallel) {
  const int side = static_cast<int>(state.range(0));
  const rqd::SearchOptions opts{.parallel = parallel};
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = rqd::beta_exact(side, side, opts);
    benchmark::DoNotOptimize(r.value);
    nodes = r.nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_gamma(benchmark::State& state, bool parallel) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const rqd::SearchOptions opts{.parallel = parallel};
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = rqd::gamma_exact(m, n, opts);
    benchmark::DoNotOptimize(r.value);
    nodes = r.nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

}  // namespace

BENCHMARK_CAPTURE(BM_beta, serial, false)->Arg(11)->Arg(13)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_beta, parallel, true)->Arg(11)->Arg(13)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_gamma, serial, false)
    ->Args({8, 11})
    ->Args({11, 11})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_gamma, parallel, true)
    ->Args({8, 11})
    ->Args({11, 11})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
