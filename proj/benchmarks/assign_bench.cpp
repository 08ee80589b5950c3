#include <benchmark/benchmark.h>

#include "cognates/assign.hpp"
#include "cognates/synth.hpp"

namespace {

void BM_Hungarian(benchmark::State& state) {
  cognates::SynthConfig cfg;
  cfg.n_pairs = static_cast<std::size_t>(state.range(0));
  cfg.n_distractors_per_side = static_cast<std::size_t>(state.range(1));
  cfg.noise_sigma = 0.34;
  const auto m = cognates::generate(cfg).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(cognates::hungarian_max(m));
}
BENCHMARK(BM_Hungarian)
    ->Args({100, 0})
    ->Args({300, 0})
    ->Args({300, 900})
    ->Unit(benchmark::kMillisecond);

}  // namespace
