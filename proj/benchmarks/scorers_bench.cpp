#include <benchmark/benchmark.h>

#include <random>

#include "cognates/scorers.hpp"

namespace {

void BM_Phonetic(benchmark::State& state) {
  const std::string a = "internationalisation", b = "internacionalización";
  for (auto _ : state) benchmark::DoNotOptimize(cognates::phonetic_score(a, b));
}
BENCHMARK(BM_Phonetic);

void BM_DftMagnitudes(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::poisson_distribution<std::uint32_t> counts(4.0);
  std::vector<std::uint32_t> series(static_cast<std::size_t>(state.range(0)));
  for (auto& v : series) v = counts(rng);
  for (auto _ : state) benchmark::DoNotOptimize(cognates::dft_magnitudes(series));
}
BENCHMARK(BM_DftMagnitudes)->Arg(365)->Arg(1024);

}  // namespace
