#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cognates/error.hpp"
#include "cognates/ingest.hpp"

using namespace cognates;

namespace {

LexiconSide lex(const std::string& freq, const std::string& daily, const std::string& cooc) {
  std::stringstream f(freq), d(daily), c(cooc);
  return load_lexicon(f, d, c, "toy");
}

GoldPairs gold_of(std::size_t n) {
  GoldPairs g;
  for (std::size_t k = 0; k < n; ++k) g.add("a" + std::to_string(k), "b" + std::to_string(k));
  return g;
}

}  // namespace

TEST(LoadLexicon, ParsesAllThreeFiles) {
  const auto l = lex("#total 100\nbake\t10\nhouse\t5\n", "#days 4\nbake\t1,2,3,4\n",
                     "bake\toven\t3\nbake\tbread\t2\nbake\toven\t1\n");
  EXPECT_EQ(l.total_tokens, 100u);
  EXPECT_DOUBLE_EQ(l.relative_frequency("bake"), 0.1);
  EXPECT_EQ(l.daily_counts("bake"), (std::vector<std::uint32_t>{1, 2, 3, 4}));
  EXPECT_EQ(l.context_of("bake").at("oven"), 4u);
  EXPECT_EQ(l.words, (std::vector<std::string>{"bake", "house"}));
}

TEST(LoadLexicon, MissingWordsGetZeroStatistics) {
  const auto l = lex("#total 100\nbake\t10\nhouse\t5\n", "#days 4\nbake\t1,2,3,4\n", "");
  EXPECT_EQ(l.daily_counts("house"), (std::vector<std::uint32_t>(4, 0)));
  EXPECT_TRUE(l.context_of("house").empty());
  EXPECT_EQ(l.frequency("nowhere"), 0u);
}

TEST(LoadLexicon, MalformedLineNamesLineNumber) {
  try {
    lex("#total 100\nhouse\t5\nbake ten\n", "#days 1\n", "");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadLexicon, RejectsBadCountsAndLengths) {
  EXPECT_THROW(lex("#total 100\nbake\t-1\n", "#days 1\n", ""), ParseError);
  EXPECT_THROW(lex("#total 100\nbake\t1\n", "#days 3\nbake\t1,2\n", ""), ParseError);
  EXPECT_THROW(lex("#total 100\n", "#days 2\n", "a\tb\t-4\n"), ParseError);
  EXPECT_THROW(lex("bake\t1\n", "#days 2\n", ""), ParseError);          // no #total
  EXPECT_THROW(lex("#total 5\na\t3\nb\t3\n", "#days 1\n", ""), Error);  // sum > total
}

TEST(SplitSeed, SizesAndDisjointness) {
  const auto s = split_seed(gold_of(10), 0.2, 42);
  EXPECT_EQ(s.seed.size(), 2u);
  EXPECT_EQ(s.eval.size(), 8u);
  for (const auto& [a, b] : s.seed) EXPECT_FALSE(s.eval.contains(a, b));
}

TEST(SplitSeed, Deterministic) {
  const auto a = split_seed(gold_of(50), 0.15, 9);
  const auto b = split_seed(gold_of(50), 0.15, 9);
  EXPECT_EQ(a.seed.pairs(), b.seed.pairs());
  const auto c = split_seed(gold_of(50), 0.15, 10);
  EXPECT_NE(a.seed.pairs(), c.seed.pairs());
}

TEST(SplitSeed, FloorOfFraction) {
  // 0.19999 * 600 = 119.994
  EXPECT_EQ(split_seed(gold_of(600), 0.19999, 1).seed.size(), 119u);
}

TEST(SplitSeed, RejectsBadFraction) {
  EXPECT_THROW(split_seed(gold_of(10), 0.0, 1), std::invalid_argument);
  EXPECT_THROW(split_seed(gold_of(10), 1.0, 1), std::invalid_argument);
  EXPECT_THROW(split_seed(GoldPairs{}, 0.5, 1), std::invalid_argument);
}

namespace {

LexiconSide ranked_lexicon(const std::string& prefix, std::size_t n) {
  LexiconSide l;
  l.total_tokens = 1000000000;
  l.days = 4;
  for (std::size_t k = 0; k < n; ++k) l.freq[prefix + std::to_string(k)] = 20000 - k;
  l.freq[prefix + "tie_b"] = 500;
  l.freq[prefix + "tie_a"] = 500;
  l.finalize();
  return l;
}

}  // namespace

TEST(BuildUniverse, StandardModeIsGoldWords) {
  const auto l1 = ranked_lexicon("a", 10), l2 = ranked_lexicon("b", 10);
  GoldPairs g({{"a3", "b1"}, {"a1", "b7"}, {"a5", "b2"}});
  const auto u = build_universe(l1, l2, g, UniverseMode::standard);
  EXPECT_EQ(u.x, (std::vector<std::string>{"a1", "a3", "a5"}));
  EXPECT_EQ(u.y, (std::vector<std::string>{"b1", "b2", "b7"}));
  EXPECT_TRUE(u.warnings.empty());
}

TEST(BuildUniverse, LargeModeAddsGoldOutsideTopK) {
  const auto l1 = ranked_lexicon("a", 10), l2 = ranked_lexicon("b", 10);
  GoldPairs g({{"a8", "b0"}});
  const auto u = build_universe(l1, l2, g, UniverseMode::large, 5);
  EXPECT_EQ(u.x.size(), 6u);
  EXPECT_EQ(u.x.back(), "a8");
  EXPECT_EQ(u.y.size(), 5u);
}

TEST(BuildUniverse, TiesBreakLexicographically) {
  LexiconSide l;
  l.total_tokens = 100;
  l.freq = {{"zeta", 5}, {"alpha", 5}, {"mid", 7}, {"beta", 5}};
  l.finalize();
  const auto u = build_universe(l, l, GoldPairs{}, UniverseMode::large, 3);
  EXPECT_EQ(u.x, (std::vector<std::string>{"mid", "alpha", "beta"}));
}

TEST(BuildUniverse, UnknownGoldWordWarnsButIsKept) {
  const auto l1 = ranked_lexicon("a", 3), l2 = ranked_lexicon("b", 3);
  GoldPairs g({{"ghost", "b0"}});
  const auto u = build_universe(l1, l2, g, UniverseMode::large, 2);
  EXPECT_EQ(u.warnings.size(), 1u);
  EXPECT_NE(std::find(u.x.begin(), u.x.end(), "ghost"), u.x.end());
}

TEST(BuildUniverse, TenThousandPerSideCandidateCount) {
  // k = 10000 per side: about 10^8 candidate pairs.
  const auto l1 = ranked_lexicon("a", 12000), l2 = ranked_lexicon("b", 12000);
  GoldPairs g({{"a11999", "b11999"}, {"a0", "b0"}});
  const auto u = build_universe(l1, l2, g, UniverseMode::large, 10000);
  EXPECT_EQ(u.x.size(), 10001u);
  EXPECT_EQ(u.y.size(), 10001u);
  EXPECT_NEAR(static_cast<double>(u.x.size() * u.y.size()), 1e8, 1e6);
  EXPECT_EQ(std::set<std::string>(u.x.begin(), u.x.end()).size(), u.x.size());
}

TEST(BuildUniverse, Deterministic) {
  const auto l1 = ranked_lexicon("a", 50), l2 = ranked_lexicon("b", 50);
  GoldPairs g({{"a49", "b48"}});
  const auto u1 = build_universe(l1, l2, g, UniverseMode::large, 20);
  const auto u2 = build_universe(l1, l2, g, UniverseMode::large, 20);
  EXPECT_EQ(u1.x, u2.x);
  EXPECT_EQ(u1.y, u2.y);
}
