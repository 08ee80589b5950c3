#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "cognates/matrix.hpp"

namespace fixtures {

inline cognates::ScoreMatrix matrix(std::size_t n1, std::size_t n2, std::vector<double> scores) {
  std::vector<std::string> r, c;
  for (std::size_t i = 0; i < n1; ++i) r.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < n2; ++j) c.push_back("c" + std::to_string(j));
  return cognates::ScoreMatrix(std::move(r), std::move(c), std::move(scores));
}

inline cognates::ScoreMatrix random_matrix(std::mt19937_64& rng, std::size_t n1, std::size_t n2,
                                           int quantize_levels = 0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> s(n1 * n2);
  for (auto& v : s) {
    v = u(rng);
    if (quantize_levels > 0) v = std::floor(v * quantize_levels) / quantize_levels;
  }
  return matrix(n1, n2, std::move(s));
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("cognates_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline void write_text(const std::filesystem::path& p, const std::string& body) {
  std::ofstream(p, std::ios::binary) << body;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Toy bilingual corpus in the on-disk formats. Cognate pair k shares a
// spelling stem, a frequency, a daily-count shape and context words that the
// seed bridge links; distractor words are unrelated.
struct ToyCorpus {
  std::filesystem::path l1_freq, l1_daily, l1_cooc, l2_freq, l2_daily, l2_cooc, gold;
};

inline ToyCorpus write_toy_corpus(const std::filesystem::path& dir, std::size_t pairs = 40,
                                  std::size_t days = 32, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(0, 5);
  std::poisson_distribution<int> burst(6);
  const std::vector<std::string> stems{"ab", "ka", "mo", "ri", "tu", "le", "si", "no", "pe", "gu"};
  const auto stem = [&](std::size_t k) {
    return stems[k % stems.size()] + stems[(k / stems.size()) % stems.size()] +
           std::to_string(k);
  };
  std::string f1 = "#total 1000000\n", f2 = "#total 800000\n";
  std::string d1 = "#days " + std::to_string(days) + "\n", d2 = d1;
  std::string c1, c2, g;
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::string w1 = "e" + stem(k) + "ion", w2 = "f" + stem(k) + "ione";
    g += w1 + "\t" + w2 + "\n";
    const int base = 50 + 37 * static_cast<int>(k);
    f1 += w1 + "\t" + std::to_string(base) + "\n";
    f2 += w2 + "\t" + std::to_string(base * 8 / 10 + small(rng)) + "\n";
    std::string s1, s2;
    const std::size_t peak = (k * 5) % days;
    for (std::size_t t = 0; t < days; ++t) {
      const int shape = (t == peak ? 20 : 0) + static_cast<int>((t * (k + 1)) % 7);
      s1 += (t ? "," : "") + std::to_string(shape + small(rng));
      s2 += (t ? "," : "") + std::to_string(shape + small(rng));
    }
    d1 += w1 + "\t" + s1 + "\n";
    d2 += w2 + "\t" + s2 + "\n";
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t other = (k + c + 1) % pairs;
      const std::string ctx1 = "e" + stem(other) + "ion", ctx2 = "f" + stem(other) + "ione";
      const int n = 3 + burst(rng);
      c1 += w1 + "\t" + ctx1 + "\t" + std::to_string(n) + "\n";
      c2 += w2 + "\t" + ctx2 + "\t" + std::to_string(n + small(rng)) + "\n";
    }
  }
  for (std::size_t k = 0; k < pairs; ++k) {  // distractors
    const std::string w1 = "zq" + std::to_string(k), w2 = "wx" + std::to_string(k);
    f1 += w1 + "\t" + std::to_string(10 + small(rng)) + "\n";
    f2 += w2 + "\t" + std::to_string(12 + small(rng)) + "\n";
  }
  ToyCorpus tc{dir / "l1.freq", dir / "l1.daily", dir / "l1.cooc",
               dir / "l2.freq", dir / "l2.daily", dir / "l2.cooc", dir / "gold.tsv"};
  write_text(tc.l1_freq, f1);
  write_text(tc.l1_daily, d1);
  write_text(tc.l1_cooc, c1);
  write_text(tc.l2_freq, f2);
  write_text(tc.l2_daily, d2);
  write_text(tc.l2_cooc, c2);
  write_text(tc.gold, g);
  return tc;
}

}  // namespace fixtures
