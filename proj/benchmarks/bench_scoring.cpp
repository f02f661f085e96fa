#include <benchmark/benchmark.h>

#include "closure/evaluation.hpp"
#include "closure/synthetic.hpp"

namespace {

using namespace closure;

struct Fixture {
  SimplicialDataset ds = generate_synthetic({5, 1000, 15000, 6});
  ComplexView view = build_view(ds, 0.8);
  CandidateSet cands3 = candidates(view, 3);
  CandidateSet cands4 = candidates(view, 4);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

// range(0): k, range(1): method index
void BM_Score(benchmark::State& state) {
  const auto& f = fixture();
  const auto& cands = state.range(0) == 3 ? f.cands3 : f.cands4;
  const Method m = kAllMethods[static_cast<std::size_t>(state.range(1))];
  state.SetLabel(std::string(method_name(m)));
  for (auto _ : state) {
    Scorer scorer(f.view, cands, 4);
    benchmark::DoNotOptimize(scorer.score(m));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cands.size()));
}
BENCHMARK(BM_Score)
    ->ArgsProduct({{3, 4}, benchmark::CreateDenseRange(0, 12, 1)})
    ->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PrAuc(benchmark::State& state) {
  const auto& f = fixture();
  CandidateSet cands = f.cands3;
  label_candidates(f.ds, f.view, cands, 4);
  Scorer scorer(f.view, cands, 4);
  const auto table = scorer.score(Method::SDWG);
  for (auto _ : state) benchmark::DoNotOptimize(pr_auc(table.scores, cands.labels));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cands.size()));
}
BENCHMARK(BM_PrAuc)->Unit(benchmark::kMillisecond);

// Uniform random interactions almost never close a 4-clique later, so the
// end-to-end run is only meaningful for k = 3.
void BM_Evaluate(benchmark::State& state) {
  const auto& f = fixture();
  EvalConfig config;
  config.k = static_cast<std::size_t>(state.range(0));
  config.threads = 4;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f.ds, config));
}
BENCHMARK(BM_Evaluate)->Arg(3)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
