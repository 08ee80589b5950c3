#include "cognates/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "cognates/error.hpp"
#include "cognates/text.hpp"
#include "line_reader.hpp"

namespace cognates {

std::uint64_t LexiconSide::frequency(std::string_view word) const {
  const auto it = freq.find(std::string(word));
  return it == freq.end() ? 0 : it->second;
}

double LexiconSide::relative_frequency(std::string_view word) const {
  if (total_tokens == 0) throw std::invalid_argument("lexicon has zero total tokens");
  return static_cast<double>(frequency(word)) / static_cast<double>(total_tokens);
}

const std::vector<std::uint32_t>& LexiconSide::daily_counts(std::string_view word) const {
  const auto it = daily.find(std::string(word));
  if (it != daily.end()) return it->second;
  return zero_series_;
}

const LexiconSide::CountMap& LexiconSide::context_of(std::string_view word) const {
  static const CountMap kEmpty;
  const auto it = cooc.find(std::string(word));
  return it == cooc.end() ? kEmpty : it->second;
}

bool LexiconSide::knows(std::string_view word) const {
  const std::string w(word);
  return freq.contains(w) || daily.contains(w) || cooc.contains(w);
}

void LexiconSide::validate() const {
  if (total_tokens == 0) throw std::invalid_argument("total_tokens must be positive");
  std::uint64_t sum = 0;
  for (const auto& [w, c] : freq) sum += c;
  if (sum > total_tokens) {
    throw std::invalid_argument("frequency counts sum to " + std::to_string(sum) +
                                ", more than total " + std::to_string(total_tokens));
  }
  for (const auto& [w, series] : daily) {
    if (series.size() != days) {
      throw std::invalid_argument("daily series for '" + w + "' has length " +
                                  std::to_string(series.size()) + ", expected " +
                                  std::to_string(days));
    }
  }
}

void LexiconSide::finalize() {
  validate();
  zero_series_.assign(days, 0);
  std::unordered_set<std::string> seen;
  std::erase_if(words, [&](const std::string& w) { return !seen.insert(w).second; });
  const auto note = [&](const std::string& w) {
    if (seen.insert(w).second) words.push_back(w);
  };
  // Map iteration order is unspecified; sort the stragglers for determinism.
  std::vector<std::string> extra;
  for (const auto& [w, c] : freq) if (!seen.contains(w)) extra.push_back(w);
  for (const auto& [w, s] : daily) if (!seen.contains(w)) extra.push_back(w);
  for (const auto& [w, p] : cooc) if (!seen.contains(w)) extra.push_back(w);
  std::sort(extra.begin(), extra.end());
  for (const auto& w : extra) note(w);
}

namespace {

std::uint64_t parse_count(detail::LineReader& reader, std::string_view token) {
  const auto v = text::parse_int(token);
  if (!v) reader.fail("bad count '" + std::string(token) + "'");
  if (*v < 0) reader.fail("negative count " + std::string(token));
  return static_cast<std::uint64_t>(*v);
}

std::uint64_t parse_header_value(detail::LineReader& reader, const std::string& line,
                                 std::string_view key) {
  const auto parts = text::split(line, ' ');
  if (parts.size() != 2 || parts[0] != key) reader.fail("expected '" + std::string(key) + " <n>'");
  return parse_count(reader, parts[1]);
}

void read_freq(std::istream& in, const std::string& source, LexiconSide& lex,
               std::vector<std::string>& order) {
  detail::LineReader reader(in, source);
  std::string line;
  bool have_total = false;
  while (reader.next(line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind("#total", 0) == 0) {
        lex.total_tokens = parse_header_value(reader, line, "#total");
        have_total = true;
      }
      continue;
    }
    const auto fields = text::split(line);
    if (fields.size() != 2 || fields[0].empty()) reader.fail("expected 'word<TAB>count'");
    const auto count = parse_count(reader, fields[1]);
    std::string word(fields[0]);
    if (!lex.freq.emplace(word, count).second) reader.fail("duplicate word '" + word + "'");
    order.push_back(std::move(word));
  }
  if (!have_total) throw ParseError(source, reader.line_no(), "missing '#total <N>' header");
}

void read_daily(std::istream& in, const std::string& source, LexiconSide& lex,
                std::vector<std::string>& order) {
  detail::LineReader reader(in, source);
  std::string line;
  bool have_days = false;
  while (reader.next(line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind("#days", 0) == 0) {
        lex.days = parse_header_value(reader, line, "#days");
        have_days = true;
      }
      continue;
    }
    if (!have_days) reader.fail("daily series before '#days <T>' header");
    const auto fields = text::split(line);
    if (fields.size() != 2 || fields[0].empty()) reader.fail("expected 'word<TAB>c1,...,cT'");
    std::vector<std::uint32_t> series;
    series.reserve(lex.days);
    for (auto tok : text::split(fields[1], ',')) {
      const auto c = parse_count(reader, tok);
      if (c > UINT32_MAX) reader.fail("daily count too large");
      series.push_back(static_cast<std::uint32_t>(c));
    }
    if (series.size() != lex.days) {
      reader.fail("series has " + std::to_string(series.size()) + " days, expected " +
                  std::to_string(lex.days));
    }
    std::string word(fields[0]);
    if (!lex.daily.emplace(word, std::move(series)).second) {
      reader.fail("duplicate word '" + word + "'");
    }
    order.push_back(std::move(word));
  }
  if (!have_days) throw ParseError(source, reader.line_no(), "missing '#days <T>' header");
}

void read_cooc(std::istream& in, const std::string& source, LexiconSide& lex,
               std::vector<std::string>& order) {
  detail::LineReader reader(in, source);
  std::string line;
  while (reader.next_data(line)) {
    const auto fields = text::split(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      reader.fail("expected 'word<TAB>context_word<TAB>count'");
    }
    const auto count = parse_count(reader, fields[2]);
    std::string word(fields[0]);
    auto [it, fresh] = lex.cooc.try_emplace(word);
    if (fresh) order.push_back(word);
    it->second[std::string(fields[1])] += count;
  }
}

}  // namespace

namespace {

LexiconSide load_streams(std::istream& freq, const std::string& freq_src, std::istream& daily,
                         const std::string& daily_src, std::istream& cooc,
                         const std::string& cooc_src) {
  LexiconSide lex;
  read_freq(freq, freq_src, lex, lex.words);
  read_daily(daily, daily_src, lex, lex.words);
  read_cooc(cooc, cooc_src, lex, lex.words);
  try {
    lex.finalize();
  } catch (const std::invalid_argument& e) {
    throw Error(freq_src + ": " + e.what());
  }
  return lex;
}

}  // namespace

LexiconSide load_lexicon(std::istream& freq, std::istream& daily, std::istream& cooc,
                         const std::string& source) {
  return load_streams(freq, source + "[freq]", daily, source + "[daily]", cooc,
                      source + "[cooc]");
}

LexiconSide load_lexicon(const std::filesystem::path& freq_path,
                         const std::filesystem::path& daily_path,
                         const std::filesystem::path& cooc_path) {
  const auto open = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open '" + p.string() + "'");
    return in;
  };
  auto f = open(freq_path);
  auto d = open(daily_path);
  auto c = open(cooc_path);
  return load_streams(f, freq_path.string(), d, daily_path.string(), c, cooc_path.string());
}

SeedSplit split_seed(const GoldPairs& gold, double fraction, std::uint64_t rng_seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("seed fraction must lie in (0,1), got " +
                                text::format_shortest(fraction));
  }
  if (gold.empty()) throw std::invalid_argument("cannot split an empty gold set");
  const auto n = gold.size();
  const auto n_seed = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n)));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(rng_seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<bool> in_seed(n, false);
  for (std::size_t k = 0; k < n_seed; ++k) in_seed[idx[k]] = true;
  SeedSplit split;
  const auto& pairs = gold.pairs();
  for (std::size_t k = 0; k < n; ++k) {
    (in_seed[k] ? split.seed : split.eval).add(pairs[k].first, pairs[k].second);
  }
  return split;
}

UniverseMode parse_universe_mode(std::string_view name) {
  if (name == "standard") return UniverseMode::standard;
  if (name == "large") return UniverseMode::large;
  throw std::invalid_argument("unknown universe mode '" + std::string(name) +
                              "' (expected standard|large)");
}

std::string_view to_string(UniverseMode mode) {
  return mode == UniverseMode::standard ? "standard" : "large";
}

namespace {

void order_by_frequency(std::vector<std::string>& words, const LexiconSide& lex) {
  std::sort(words.begin(), words.end(), [&](const std::string& a, const std::string& b) {
    const auto fa = lex.frequency(a), fb = lex.frequency(b);
    if (fa != fb) return fa > fb;
    return a < b;
  });
}

std::vector<std::string> side_universe(const LexiconSide& lex,
                                       const std::vector<std::string>& gold_words,
                                       UniverseMode mode, std::size_t k,
                                       std::vector<std::string>& warnings,
                                       std::string_view side) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  if (mode == UniverseMode::large) {
    std::vector<std::string> all;
    all.reserve(lex.freq.size());
    for (const auto& [w, c] : lex.freq) all.push_back(w);
    order_by_frequency(all, lex);
    if (all.size() > k) all.resize(k);
    for (auto& w : all) {
      seen.insert(w);
      out.push_back(std::move(w));
    }
  }
  for (const auto& w : gold_words) {
    if (!lex.knows(w)) {
      warnings.push_back(std::string(side) + " gold word '" + w +
                         "' not in lexicon; scored with zero statistics");
    }
    if (seen.insert(w).second) out.push_back(w);
  }
  order_by_frequency(out, lex);
  return out;
}

}  // namespace

Universe build_universe(const LexiconSide& lex1, const LexiconSide& lex2, const GoldPairs& gold,
                        UniverseMode mode, std::size_t k) {
  if (mode == UniverseMode::large && k < 1) {
    throw std::invalid_argument("large universe requires k >= 1");
  }
  std::vector<std::string> g1, g2;
  for (const auto& [a, b] : gold) {
    g1.push_back(a);
    g2.push_back(b);
  }
  Universe u;
  u.x = side_universe(lex1, g1, mode, k, u.warnings, "L1");
  u.y = side_universe(lex2, g2, mode, k, u.warnings, "L2");
  return u;
}

}  // namespace cognates
