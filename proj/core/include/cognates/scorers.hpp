#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cognates/ingest.hpp"
#include "cognates/matrix.hpp"

namespace cognates {

enum class MetricId { context, frequency, temporal, burstiness, phonetic };

inline constexpr std::array<MetricId, 5> kAllMetrics{
    MetricId::context, MetricId::frequency, MetricId::temporal, MetricId::burstiness,
    MetricId::phonetic};

std::string_view to_string(MetricId id);
MetricId parse_metric(std::string_view name);

/// Translation bridge from second-language words to first-language words,
/// used to project context vectors into a shared space.
class SeedLexicon {
 public:
  SeedLexicon() = default;
  explicit SeedLexicon(const GoldPairs& seed);

  bool empty() const noexcept { return l2_to_l1_.empty(); }
  std::size_t size() const noexcept { return l2_to_l1_.size(); }
  const std::string* translate(std::string_view l2_word) const;
  /// Distinct first-language targets, sorted. These are the context dimensions.
  const std::vector<std::string>& dimensions() const noexcept { return dims_; }

 private:
  std::unordered_map<std::string, std::string> l2_to_l1_;
  std::vector<std::string> dims_;
};

// Building blocks, exposed for testing.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
/// min/max ratio; 1 when both are zero, 0 when exactly one is.
double ratio_similarity(double a, double b);
/// Population variance over mean; 0 for an all-zero series.
double fano_factor(std::span<const std::uint32_t> series);
/// |DFT| of the series at bins 1..floor(T/2).
std::vector<double> dft_magnitudes(std::span<const std::uint32_t> series);
/// Spearman correlation with average ranks for ties. Values closer than
/// `tie_tolerance` (absolute) are treated as tied. Returns 0 when either
/// side is constant.
double spearman(std::span<const double> a, std::span<const double> b, double tie_tolerance_a = 0.0,
                double tie_tolerance_b = 0.0);

/// 1 - levenshtein / max length, over unicode scalars. Two empty strings
/// score 1.
double phonetic_score(std::string_view w1, std::string_view w2);

/// Similarity of relative corpus frequencies.
double frequency_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                       const LexiconSide& lex2);

/// Spearman correlation of daily-count spectra (DC bin dropped), rescaled
/// from [-1,1] to [0,1].
double temporal_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                      const LexiconSide& lex2);

/// Similarity of daily-count Fano factors.
double burstiness_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                        const LexiconSide& lex2);

/// Cosine of positive-PMI context vectors, with the second word's contexts
/// mapped through `bridge`.
double context_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                     const LexiconSide& lex2, const SeedLexicon& bridge);

/// Matrix of `metric` over all (x, y) pairs. Entry (i,j) equals the
/// single-pair scorer on (x[i], y[j]).
ScoreMatrix score_all_pairs(MetricId metric, const std::vector<std::string>& x,
                            const std::vector<std::string>& y, const LexiconSide& lex1,
                            const LexiconSide& lex2, const SeedLexicon& bridge);

}  // namespace cognates
