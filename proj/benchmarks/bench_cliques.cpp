#include <benchmark/benchmark.h>

#include "closure/cliques.hpp"
#include "closure/synthetic.hpp"

namespace {

using namespace closure;

const SimplicialDataset& dataset() {
  static const auto ds = generate_synthetic({5, 1000, 15000, 6});
  return ds;
}

void BM_BuildView(benchmark::State& state) {
  const auto& ds = dataset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_view(ds, 0.8, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_BuildView)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EnumerateCliques(benchmark::State& state) {
  const auto view = build_view(dataset(), 0.8);
  const auto k = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    const auto cliques = enumerate_k_cliques(view, k, static_cast<unsigned>(state.range(1)));
    count = cliques.size();
  }
  state.counters["cliques"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateCliques)->Args({3, 1})->Args({3, 4})->Args({4, 1})->Args({4, 4})
    ->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Candidates(benchmark::State& state) {
  const auto view = build_view(dataset(), 0.8);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(candidates(view, k, static_cast<unsigned>(state.range(1))));
  }
}
BENCHMARK(BM_Candidates)->Args({3, 1})->Args({3, 4})->Args({4, 4})
    ->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
