#include <benchmark/benchmark.h>

#include "cognates/rescore.hpp"
#include "cognates/synth.hpp"

namespace {

cognates::ScoreMatrix square(std::size_t n) {
  cognates::SynthConfig cfg;
  cfg.n_pairs = n;
  cfg.noise_sigma = 0.34;
  return cognates::generate(cfg).matrix;
}

void BM_ReverseRanks(benchmark::State& state) {
  const auto m = square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cognates::reverse_ranks(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}
BENCHMARK(BM_ReverseRanks)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_ForwardRanks(benchmark::State& state) {
  const auto m = square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cognates::forward_ranks(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}
BENCHMARK(BM_ForwardRanks)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_TwoStep(benchmark::State& state) {
  const auto m = square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cognates::rescore_rr_fr_2step(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}
BENCHMARK(BM_TwoStep)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace
