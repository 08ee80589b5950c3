#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cognates/matrix.hpp"

namespace cognates {

/// Corpus statistics for one language. Words are assumed to be lemmas
/// already; lemmatization happens upstream.
struct LexiconSide {
  using CountMap = std::unordered_map<std::string, std::uint64_t>;

  std::vector<std::string> words;  // first-seen order across the three files
  std::uint64_t total_tokens = 0;
  std::size_t days = 0;
  CountMap freq;
  std::unordered_map<std::string, std::vector<std::uint32_t>> daily;
  std::unordered_map<std::string, CountMap> cooc;

  std::uint64_t frequency(std::string_view word) const;
  double relative_frequency(std::string_view word) const;
  /// Daily series for `word`, a zero vector of length `days` if absent.
  const std::vector<std::uint32_t>& daily_counts(std::string_view word) const;
  /// Co-occurrence profile of `word`, empty if absent.
  const CountMap& context_of(std::string_view word) const;
  bool knows(std::string_view word) const;

  /// Checks the structural invariants; throws std::invalid_argument.
  void validate() const;
  /// Validates, then appends any word seen only in the maps to `words`.
  /// Call after populating the fields by hand.
  void finalize();

 private:
  std::vector<std::uint32_t> zero_series_;
};

// freq:  `#total <N>` then `word<TAB>count`
// daily: `#days <T>` then `word<TAB>c1,c2,...,cT`
// cooc:  `word<TAB>context_word<TAB>count`
LexiconSide load_lexicon(std::istream& freq, std::istream& daily, std::istream& cooc,
                         const std::string& source = "<stream>");
LexiconSide load_lexicon(const std::filesystem::path& freq_path,
                         const std::filesystem::path& daily_path,
                         const std::filesystem::path& cooc_path);

struct SeedSplit {
  GoldPairs seed;  // used for weight training and as the context bridge
  GoldPairs eval;  // everything else; never used for training
};

/// Random partition with |seed| = floor(fraction * |gold|), deterministic in
/// `rng_seed`.
SeedSplit split_seed(const GoldPairs& gold, double fraction, std::uint64_t rng_seed);

enum class UniverseMode { standard, large };

UniverseMode parse_universe_mode(std::string_view name);
std::string_view to_string(UniverseMode mode);

struct Universe {
  std::vector<std::string> x;  // first-language candidates
  std::vector<std::string> y;  // second-language candidates
  std::vector<std::string> warnings;
};

/// Candidate words per side. Standard mode keeps the gold words only; large
/// mode keeps the `k` most frequent words plus any gold word left out. Both
/// sides are ordered by descending frequency, ties lexicographic.
Universe build_universe(const LexiconSide& lex1, const LexiconSide& lex2, const GoldPairs& gold,
                        UniverseMode mode, std::size_t k = 10000);

}  // namespace cognates
