#include "cognates/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cognates/text.hpp"

namespace cognates {

void SynthConfig::validate() const {
  if (n_pairs < 1) throw std::invalid_argument("synth: n_pairs must be >= 1");
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw std::invalid_argument("synth: noise_sigma must be >= 0");
  }
  if (!std::isfinite(signal_mu)) throw std::invalid_argument("synth: signal_mu must be finite");
}

std::string SynthConfig::describe() const {
  return "synth n_pairs=" + std::to_string(n_pairs) +
         " n_distractors_per_side=" + std::to_string(n_distractors_per_side) +
         " noise_sigma=" + text::format_shortest(noise_sigma) +
         " signal_mu=" + text::format_shortest(signal_mu) + " rng_seed=" + std::to_string(rng_seed);
}

namespace {

std::vector<std::string> make_labels(char prefix, std::size_t n) {
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto digits = std::to_string(k);
    out.push_back(prefix + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

}  // namespace

SynthData generate(const SynthConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.n_pairs + cfg.n_distractors_per_side;
  std::mt19937_64 rng(cfg.rng_seed);

  std::vector<std::size_t> rows(n), cols(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);

  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> gold_col(n, kNone);
  for (std::size_t k = 0; k < cfg.n_pairs; ++k) gold_col[rows[k]] = cols[k];

  std::normal_distribution<double> noise(0.0, cfg.noise_sigma > 0.0 ? cfg.noise_sigma : 1.0);
  const auto draw = [&] { return cfg.noise_sigma > 0.0 ? noise(rng) : 0.0; };
  std::vector<double> scores(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double mean = gold_col[i] == j ? cfg.signal_mu : 0.0;
      scores[i * n + j] = mean + draw();
    }
  }

  auto row_labels = make_labels('x', n);
  auto col_labels = make_labels('y', n);
  GoldPairs gold;
  for (std::size_t k = 0; k < cfg.n_pairs; ++k) gold.add(row_labels[rows[k]], col_labels[cols[k]]);
  ScoreMatrix raw(std::move(row_labels), std::move(col_labels), std::move(scores));
  return {normalize_min_max(raw), std::move(gold)};
}

}  // namespace cognates
