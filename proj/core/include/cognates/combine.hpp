#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>

#include "cognates/matrix.hpp"
#include "cognates/scorers.hpp"

namespace cognates {

using MetricMatrices = std::map<MetricId, ScoreMatrix>;

struct WeightVector {
  std::map<MetricId, double> weights;
  double bias = 0.0;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct TrainingConfig {
  double regularization = 1e-3;
  int epochs = 200;
  int negative_ratio = 5;
  std::uint64_t rng_seed = 13;

  void validate() const;
};

/// Learns one weight per metric with a linear hinge-loss SVM. Seed pairs
/// are positives; negatives are `negative_ratio` random pairs per positive
/// that share no word with any seed pair. Deterministic in `cfg`.
WeightVector train_weights(const MetricMatrices& metrics, const GoldPairs& seed,
                           const TrainingConfig& cfg = {});

/// Every metric weighted 1, no bias.
WeightVector uniform_weights(const MetricMatrices& metrics);

/// Entrywise sum of w_m * score_m plus bias, not normalized.
ScoreMatrix weighted_sum(const MetricMatrices& metrics, const WeightVector& weights);

/// weighted_sum followed by min-max normalization: the baseline matrix.
ScoreMatrix combine(const MetricMatrices& metrics, const WeightVector& weights);

// `metric<TAB>weight` lines plus a `#bias <b>` line.
void write_weights(std::ostream& out, const WeightVector& w);
WeightVector read_weights(std::istream& in, const std::string& source = "<stream>");
void save_weights(const WeightVector& w, const std::filesystem::path& path);
WeightVector load_weights(const std::filesystem::path& path);

}  // namespace cognates
