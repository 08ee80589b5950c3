#include <gtest/gtest.h>

#include <sstream>

#include "cli/commands.hpp"
#include "cognates/evaluate.hpp"
#include "cognates/combine.hpp"
#include "cognates/matrix.hpp"
#include "cognates/rescore.hpp"
#include "cognates/synth.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using cognates::cli::run;
using fixtures::read_text;

namespace {

int cog(std::vector<std::string> args) {
  args.insert(args.begin(), "cogdetect");
  return run(args);
}

std::vector<std::string> report_methods(const fs::path& report) {
  std::istringstream in(read_text(report));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line.substr(0, line.find('\t')));
  }
  return out;
}

std::vector<std::string> corpus_flags(const fixtures::ToyCorpus& c) {
  return {"--l1-freq", c.l1_freq.string(),  "--l1-daily", c.l1_daily.string(),
          "--l1-cooc", c.l1_cooc.string(),  "--l2-freq",  c.l2_freq.string(),
          "--l2-daily", c.l2_daily.string(), "--l2-cooc",  c.l2_cooc.string(),
          "--gold",    c.gold.string()};
}

std::vector<std::string> operator+(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST(Cli, SynthPipelineReport) {
  const auto out = fixtures::temp_dir("cli_synth");
  ASSERT_EQ(cog({"pipeline", "--source", "synth", "--pairs", "40", "--sigma", "0.3", "--out",
                 out.string(), "--methods", "baseline,rr,fr,rr_fr_1step,rr_fr_2step,hungarian"}),
            0);
  EXPECT_EQ(report_methods(out / "report.tsv"),
            (std::vector<std::string>{"baseline", "rr", "fr", "rr_fr_1step", "rr_fr_2step",
                                      "max_assignment"}));
  for (const char* f : {"baseline.cogm", "gold.tsv", "manifest.txt", "assignment.tsv",
                        "curve_rr.tsv", "curve_max_assignment.tsv"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto manifest = read_text(out / "manifest.txt");
  EXPECT_NE(manifest.find("command=pipeline"), std::string::npos);
  EXPECT_NE(manifest.find("setting.sigma=0.3"), std::string::npos);
}

TEST(Cli, EvalMatchesLibrary) {
  const auto dir = fixtures::temp_dir("cli_eval");
  ASSERT_EQ(cog({"synth", "--pairs", "30", "--distractors", "10", "--seed", "4", "--out",
                 dir.string()}),
            0);
  ASSERT_EQ(cog({"eval", "--matrix", (dir / "matrix.cogm").string(), "--gold",
                 (dir / "gold.tsv").string(), "--methods", "baseline,rr", "--out", dir.string()}),
            0);
  const auto m = cognates::load_matrix(dir / "matrix.cogm");
  const auto gold = cognates::load_gold(dir / "gold.tsv");
  const auto report = cognates::compare_methods(
      {{"baseline", m}, {"rr", cognates::apply(cognates::RescoreMethod::rr, m)}}, gold);
  std::ostringstream expected;
  cognates::write_report(expected, report);
  EXPECT_EQ(read_text(dir / "report.tsv"), expected.str());

  cognates::SynthConfig cfg;
  cfg.n_pairs = 30;
  cfg.n_distractors_per_side = 10;
  cfg.rng_seed = 4;
  EXPECT_TRUE(cognates::generate(cfg).matrix == m);
}

TEST(Cli, RescoreThenAssign) {
  const auto dir = fixtures::temp_dir("cli_rescore");
  ASSERT_EQ(cog({"synth", "--pairs", "12", "--out", dir.string()}), 0);
  ASSERT_EQ(cog({"rescore", "--matrix", (dir / "matrix.cogm").string(), "--methods",
                 "rr_fr_2step", "--out", dir.string()}),
            0);
  const auto m = cognates::load_matrix(dir / "matrix.cogm");
  EXPECT_TRUE(cognates::load_matrix(dir / "rr_fr_2step.cogm") == cognates::rescore_rr_fr_2step(m));
  ASSERT_EQ(cog({"assign", "--matrix", (dir / "matrix.cogm").string(), "--gold",
                 (dir / "gold.tsv").string(), "--out", dir.string()}),
            0);
  EXPECT_TRUE(fs::exists(dir / "curve_max_assignment.tsv"));
  EXPECT_EQ(cog({"assign", "--matrix", (dir / "matrix.cogm").string(), "--hungarian-max-side",
                 "5", "--out", dir.string()}),
            1);
}

TEST(Cli, UsageErrors) {
  const auto dir = fixtures::temp_dir("cli_usage");
  ASSERT_EQ(cog({"synth", "--pairs", "5", "--out", dir.string()}), 0);
  const auto matrix = (dir / "matrix.cogm").string();
  const auto gold = (dir / "gold.tsv").string();
  EXPECT_EQ(cog({"eval", "--matrix", matrix, "--gold", gold, "--methods", "nonsense", "--out",
                 dir.string()}),
            2);
  EXPECT_EQ(cog({"eval", "--matrix", (dir / "absent.cogm").string(), "--gold", gold, "--out",
                 dir.string()}),
            2);
  EXPECT_EQ(cog({"rescore", "--matrix", matrix, "--methods", "hungarian", "--out", dir.string()}),
            2);
  EXPECT_EQ(cog({"frobnicate"}), 2);
  EXPECT_EQ(cog({"synth", "--pairs", "-3", "--out", dir.string()}), 2);
  EXPECT_EQ(cog({"synth", "--pairs", "4"}), 2);  // no --out
}

TEST(Cli, MalformedInputIsRuntimeError) {
  const auto dir = fixtures::temp_dir("cli_malformed");
  fixtures::write_text(dir / "bad.cogm", "#cogmatrix v1 1 1\ny\nx\tnot-a-number\n");
  fixtures::write_text(dir / "gold.tsv", "x\ty\n");
  EXPECT_EQ(cog({"eval", "--matrix", (dir / "bad.cogm").string(), "--gold",
                 (dir / "gold.tsv").string(), "--out", dir.string()}),
            1);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto dir = fixtures::temp_dir("cli_config");
  fixtures::write_text(dir / "run.cfg", "# synthetic run\nsource = synth\npairs = 20\nsigma = 0.9\n"
                                        "methods = baseline,rr\n");
  ASSERT_EQ(cog({"pipeline", "--config", (dir / "run.cfg").string(), "--sigma", "0.2", "--out",
                 dir.string()}),
            0);
  const auto manifest = read_text(dir / "manifest.txt");
  EXPECT_NE(manifest.find("setting.sigma=0.2"), std::string::npos);
  EXPECT_NE(manifest.find("setting.pairs=20"), std::string::npos);
  EXPECT_EQ(report_methods(dir / "report.tsv"), (std::vector<std::string>{"baseline", "rr"}));

  fixtures::write_text(dir / "bad.cfg", "no_such_key = 1\n");
  EXPECT_EQ(cog({"pipeline", "--config", (dir / "bad.cfg").string(), "--out", dir.string()}), 2);
}

TEST(Cli, CorpusPipelineAndStagesAgree) {
  const auto dir = fixtures::temp_dir("cli_corpus");
  const auto corpus = fixtures::write_toy_corpus(dir);
  const auto full = dir / "full", staged = dir / "staged";
  fs::create_directories(full);
  fs::create_directories(staged);
  ASSERT_EQ(cog(std::vector<std::string>{"pipeline", "--out", full.string()} + corpus_flags(corpus)),
            0);
  EXPECT_EQ(report_methods(full / "report.tsv"),
            (std::vector<std::string>{"baseline", "rr", "rr_fr_1step", "rr_fr_2step"}));

  ASSERT_EQ(cog(std::vector<std::string>{"score", "--out", staged.string()} + corpus_flags(corpus)),
            0);
  ASSERT_EQ(cog({"train", "--in", staged.string(), "--out", staged.string()}), 0);
  ASSERT_EQ(cog({"combine", "--in", staged.string(), "--out", staged.string()}), 0);
  ASSERT_EQ(cog({"eval", "--matrix", (staged / "baseline.cogm").string(), "--gold",
                 (staged / "eval_pairs.tsv").string(), "--out", staged.string()}),
            0);
  EXPECT_EQ(read_text(staged / "weights.tsv"), read_text(full / "weights.tsv"));
  EXPECT_EQ(read_text(staged / "baseline.cogm"), read_text(full / "baseline.cogm"));
  EXPECT_EQ(read_text(staged / "report.tsv"), read_text(full / "report.tsv"));
}

TEST(Cli, PipelineIsDeterministic) {
  const auto dir = fixtures::temp_dir("cli_determinism");
  const auto corpus = fixtures::write_toy_corpus(dir, 30);
  const auto a = dir / "a", b = dir / "b";
  fs::create_directories(a);
  fs::create_directories(b);
  for (const auto& out : {a, b}) {
    ASSERT_EQ(cog(std::vector<std::string>{"pipeline", "--mode", "large", "--k", "20", "--out",
                                           out.string()} +
                  corpus_flags(corpus)),
              0);
  }
  for (const char* f : {"report.tsv", "weights.tsv", "baseline.cogm", "curve_rr_fr_2step.tsv"}) {
    EXPECT_EQ(read_text(a / f), read_text(b / f)) << f;
  }
  // Manifests differ only in the output directory setting.
  auto ma = read_text(a / "manifest.txt"), mb = read_text(b / "manifest.txt");
  EXPECT_EQ(ma.size(), mb.size());
}

TEST(Cli, UniformWeightsOption) {
  const auto dir = fixtures::temp_dir("cli_uniform");
  const auto corpus = fixtures::write_toy_corpus(dir, 20);
  ASSERT_EQ(cog(std::vector<std::string>{"pipeline", "--weights", "uniform", "--out",
                                         dir.string()} +
                corpus_flags(corpus)),
            0);
  const auto w = cognates::load_weights(dir / "weights.tsv");
  for (const auto& [id, v] : w.weights) EXPECT_EQ(v, 1.0);
}
