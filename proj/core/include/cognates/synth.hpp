#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "cognates/matrix.hpp"

namespace cognates {

/// Planted one-to-one relation with Gaussian noise. Gold cells draw from
/// N(signal_mu, noise_sigma), all others from N(0, noise_sigma).
struct SynthConfig {
  std::size_t n_pairs = 300;
  std::size_t n_distractors_per_side = 0;
  double noise_sigma = 0.5;
  double signal_mu = 1.0;
  std::uint64_t rng_seed = 1;

  void validate() const;
  /// One-line `key=value` description, recorded in output headers.
  std::string describe() const;
};

struct SynthData {
  ScoreMatrix matrix;  // min-max normalized
  GoldPairs gold;
};

/// Deterministic in cfg: one RNG stream, cells drawn in row-major order.
SynthData generate(const SynthConfig& cfg);

}  // namespace cognates
