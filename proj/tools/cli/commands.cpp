#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include "cli/manifest.hpp"
#include "cli/settings.hpp"
#include "cognates/assign.hpp"
#include "cognates/combine.hpp"
#include "cognates/error.hpp"
#include "cognates/evaluate.hpp"
#include "cognates/ingest.hpp"
#include "cognates/matrix.hpp"
#include "cognates/rescore.hpp"
#include "cognates/scorers.hpp"
#include "cognates/synth.hpp"

namespace fs = std::filesystem;

namespace cognates::cli {

namespace {

struct OptionSpec {
  const char* name;
  const char* fallback;  // empty: no default
  const char* help;
};

constexpr OptionSpec kOptions[] = {
    {"config", "", "key = value file; flags override its entries"},
    {"out", "", "output directory"},
    {"seed", "13", "seed for every random choice (split, negatives, synthesis)"},
    {"mode", "standard", "candidate universe: standard|large"},
    {"k", "10000", "most frequent words per side in large mode"},
    {"methods", "baseline,rr,rr_fr_1step,rr_fr_2step",
     "comma list of baseline,rr,fr,rr_fr_1step,rr_fr_2step,hungarian"},
    {"metrics", "context,frequency,temporal,burstiness,phonetic", "comma list of metrics"},
    {"weights", "learned", "combination weights: learned|uniform"},
    {"weights-file", "", "weights file (default <in>/weights.tsv)"},
    {"l1-freq", "", "first-language frequency file"},
    {"l1-daily", "", "first-language daily counts file"},
    {"l1-cooc", "", "first-language co-occurrence file"},
    {"l2-freq", "", "second-language frequency file"},
    {"l2-daily", "", "second-language daily counts file"},
    {"l2-cooc", "", "second-language co-occurrence file"},
    {"gold", "", "gold pairs file"},
    {"seed-fraction", "0.15", "fraction of gold pairs used as the training seed"},
    {"regularization", "0.001", "SVM L2 regularization"},
    {"epochs", "200", "SVM subgradient epochs"},
    {"negative-ratio", "5", "random negatives per seed pair"},
    {"in", "", "directory written by an earlier stage"},
    {"matrix", "", "score matrix file"},
    {"pairs", "300", "synthetic gold pairs"},
    {"distractors", "0", "synthetic unmatched words per side"},
    {"sigma", "0.5", "synthetic noise standard deviation"},
    {"mu", "1.0", "synthetic mean score of gold cells"},
    {"source", "corpus", "pipeline input: corpus|synth"},
    {"hungarian-max-side", "20000", "refuse assignment above this many rows or columns"},
};

const OptionSpec& spec_of(const std::string& name) {
  for (const auto& o : kOptions) {
    if (name == o.name) return o;
  }
  throw std::logic_error("unregistered option " + name);
}

const std::vector<std::string> kCommon{"config", "out", "seed", "mode", "k", "methods",
                                       "metrics", "weights"};
const std::vector<std::string> kCorpus{"l1-freq", "l1-daily", "l1-cooc", "l2-freq",
                                       "l2-daily", "l2-cooc", "gold", "seed-fraction"};
const std::vector<std::string> kTraining{"regularization", "epochs", "negative-ratio"};
const std::vector<std::string> kSynth{"pairs", "distractors", "sigma", "mu"};

// ---------------------------------------------------------------------------
// typed views of the settings

std::vector<MetricId> metrics_of(const Settings& s) {
  std::vector<MetricId> out;
  for (const auto& name : s.list("metrics")) {
    try {
      out.push_back(parse_metric(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

struct MethodPlan {
  std::vector<RescoreMethod> rescore;
  bool hungarian = false;
};

MethodPlan methods_of(const Settings& s) {
  MethodPlan plan;
  for (const auto& name : s.list("methods")) {
    if (name == "hungarian") {
      plan.hungarian = true;
      continue;
    }
    try {
      plan.rescore.push_back(parse_rescore_method(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return plan;
}

TrainingConfig training_of(const Settings& s) {
  TrainingConfig cfg;
  cfg.regularization = s.real("regularization");
  cfg.epochs = static_cast<int>(s.integer("epochs"));
  cfg.negative_ratio = static_cast<int>(s.integer("negative-ratio"));
  cfg.rng_seed = s.unsigned_integer("seed");
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

SynthConfig synth_of(const Settings& s) {
  SynthConfig cfg;
  cfg.n_pairs = s.unsigned_integer("pairs");
  cfg.n_distractors_per_side = s.unsigned_integer("distractors");
  cfg.noise_sigma = s.real("sigma");
  cfg.signal_mu = s.real("mu");
  cfg.rng_seed = s.unsigned_integer("seed");
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

UniverseMode mode_of(const Settings& s) {
  try {
    return parse_universe_mode(s.str("mode"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

bool uniform_weights_requested(const Settings& s) {
  const auto w = s.str("weights");
  if (w == "uniform") return true;
  if (w == "learned") return false;
  throw UsageError("--weights must be learned|uniform, got '" + w + "'");
}

fs::path out_dir(const Settings& s) {
  fs::path out = s.str("out");
  fs::create_directories(out);
  return out;
}

std::string metric_file(MetricId id) { return "metric_" + std::string(to_string(id)) + ".cogm"; }

// ---------------------------------------------------------------------------
// shared stages

struct Corpus {
  LexiconSide lex1, lex2;
  GoldPairs gold;
  std::vector<fs::path> inputs;
};

Corpus load_corpus(const Settings& s) {
  Corpus c;
  c.inputs = {s.existing_file("l1-freq"), s.existing_file("l1-daily"), s.existing_file("l1-cooc"),
              s.existing_file("l2-freq"), s.existing_file("l2-daily"), s.existing_file("l2-cooc"),
              s.existing_file("gold")};
  c.lex1 = load_lexicon(c.inputs[0], c.inputs[1], c.inputs[2]);
  c.lex2 = load_lexicon(c.inputs[3], c.inputs[4], c.inputs[5]);
  c.gold = load_gold(c.inputs[6]);
  return c;
}

MetricMatrices score_metrics(const Corpus& c, const SeedSplit& split, const Settings& s,
                             Manifest& manifest) {
  const auto universe = build_universe(c.lex1, c.lex2, c.gold, mode_of(s),
                                       static_cast<std::size_t>(s.unsigned_integer("k")));
  for (const auto& w : universe.warnings) {
    std::cerr << "cogdetect: warning: " << w << '\n';
    manifest.notes.push_back(w);
  }
  const SeedLexicon bridge(split.seed);
  MetricMatrices out;
  for (auto id : metrics_of(s)) {
    out.emplace(id, score_all_pairs(id, universe.x, universe.y, c.lex1, c.lex2, bridge));
  }
  return out;
}

// Rows and columns of seed words are dropped before evaluation.
ScoreMatrix without_seed(const ScoreMatrix& m, const GoldPairs& seed) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!seed.partner_of_l1(m.row_labels()[i])) rows.push_back(i);
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!seed.partner_of_l2(m.col_labels()[j])) cols.push_back(j);
  }
  return m.submatrix(rows, cols);
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  body(out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

// Evaluates every requested method on `baseline`, one rescored matrix alive
// at a time, writing per-method curves and the report.
void evaluate_methods(const ScoreMatrix& baseline, const GoldPairs& gold, const MethodPlan& plan,
                      const fs::path& out, std::size_t hungarian_max_side, Manifest& manifest,
                      bool save_rescored = false) {
  Report report;
  for (auto method : plan.rescore) {
    const std::string name(to_string(method));
    const auto m = apply(method, baseline);
    if (save_rescored) save_matrix(m, out / (name + ".cogm"));
    auto curve = pr_curve(m, gold);
    write_file(out / ("curve_" + name + ".tsv"), [&](std::ostream& os) { write_curve(os, curve, name); });
    report.rows.push_back({name, curve.max_f1, curve.iap11});
    report.curves.push_back(std::move(curve));
  }
  if (plan.hungarian) {
    try {
      const auto a = hungarian_max(baseline, {hungarian_max_side});
      save_assignment(baseline, a, out / "assignment.tsv");
      auto curve = max_assignment_curve(baseline, a, gold);
      write_file(out / "curve_max_assignment.tsv",
                 [&](std::ostream& os) { write_curve(os, curve, "max_assignment"); });
      report.rows.push_back({"max_assignment", curve.max_f1, curve.iap11});
      report.curves.push_back(std::move(curve));
    } catch (const ResourceError& e) {
      std::cerr << "cogdetect: warning: " << e.what() << '\n';
      manifest.notes.push_back(e.what());
    }
  }
  write_file(out / "report.tsv", [&](std::ostream& os) { write_report(os, report); });
}

// ---------------------------------------------------------------------------
// commands

void cmd_score(const Settings& s, Manifest& manifest) {
  const auto out = out_dir(s);
  const auto corpus = load_corpus(s);
  manifest.inputs = corpus.inputs;
  const auto split = split_seed(corpus.gold, s.real("seed-fraction"), s.unsigned_integer("seed"));
  const auto metrics = score_metrics(corpus, split, s, manifest);
  for (const auto& [id, m] : metrics) save_matrix(m, out / metric_file(id));
  save_gold(split.seed, out / "seed_pairs.tsv");
  save_gold(split.eval, out / "eval_pairs.tsv");
}

MetricMatrices load_metrics(const fs::path& dir, const Settings& s, Manifest& manifest) {
  MetricMatrices out;
  for (auto id : metrics_of(s)) {
    const auto p = dir / metric_file(id);
    if (!fs::is_regular_file(p)) throw UsageError("missing metric matrix '" + p.string() + "'");
    manifest.inputs.push_back(p);
    out.emplace(id, load_matrix(p));
  }
  return out;
}

GoldPairs load_seed(const fs::path& dir, Manifest& manifest) {
  const auto p = dir / "seed_pairs.tsv";
  if (!fs::is_regular_file(p)) throw UsageError("missing seed pairs '" + p.string() + "'");
  manifest.inputs.push_back(p);
  return load_gold(p);
}

void cmd_train(const Settings& s, Manifest& manifest) {
  const auto out = out_dir(s);
  const fs::path in = s.str("in");
  const auto metrics = load_metrics(in, s, manifest);
  const auto seed = load_seed(in, manifest);
  save_weights(train_weights(metrics, seed, training_of(s)), out / "weights.tsv");
}

void cmd_combine(const Settings& s, Manifest& manifest) {
  const auto out = out_dir(s);
  const fs::path in = s.str("in");
  const auto metrics = load_metrics(in, s, manifest);
  WeightVector w;
  if (uniform_weights_requested(s)) {
    w = uniform_weights(metrics);
  } else {
    const fs::path wf = s.maybe("weights-file").value_or((in / "weights.tsv").string());
    if (!fs::is_regular_file(wf)) throw UsageError("missing weights file '" + wf.string() + "'");
    manifest.inputs.push_back(wf);
    w = load_weights(wf);
  }
  auto combined = combine(metrics, w);
  if (fs::is_regular_file(in / "seed_pairs.tsv")) {
    combined = without_seed(combined, load_seed(in, manifest));
  }
  save_matrix(combined, out / "baseline.cogm");
}

void cmd_rescore(const Settings& s, Manifest& manifest) {
  const auto out = out_dir(s);
  const auto path = s.existing_file("matrix");
  manifest.inputs.push_back(path);
  const auto plan = methods_of(s);
  if (plan.hungarian) throw UsageError("rescore does not run hungarian; use the assign command");
  const auto m = load_matrix(path);
  for (auto method : plan.rescore) {
    save_matrix(apply(method, m), out / (std::string(to_string(method)) + ".cogm"));
  }
}

void cmd_assign(const Settings& s, Manifest& manifest) {
  const auto out = out_dir(s);
  const auto path = s.existing_file("matrix");
  manifest.inputs.push_back(path);
  const auto m = load_matrix(path);
  const auto a =
      hungarian_max(m, {static_cast<std::size_t>(s.unsigned_integer("hungarian-max-side"))});
  save_assignment(m, a, out / "assignment.tsv");
  if (s.has("gold")) {
    const auto gold_path = s.existing_file("gold");
    manifest.inputs.push_back(gold_path);
    const auto curve = max_assignment_curve(m, a, load_gold(gold_path));
    write_file(out / "curve_max_assignment.tsv",
               [&](std::ostream& os) { write_curve(os, curve, "max_assignment"); });
  }
}

void cmd_eval(const Settings& s, Manifest& manifest) {
  const auto out = out_dir(s);
  const auto path = s.existing_file("matrix");
  const auto gold_path = s.existing_file("gold");
  manifest.inputs = {path, gold_path};
  const auto plan = methods_of(s);
  evaluate_methods(load_matrix(path), load_gold(gold_path), plan, out,
                   static_cast<std::size_t>(s.unsigned_integer("hungarian-max-side")), manifest);
}

void cmd_synth(const Settings& s, Manifest&) {
  const auto out = out_dir(s);
  const auto cfg = synth_of(s);
  const auto data = generate(cfg);
  save_matrix(data.matrix, out / "matrix.cogm");
  save_gold(data.gold, out / "gold.tsv", cfg.describe());
}

void cmd_pipeline(const Settings& s, Manifest& manifest) {
  const auto out = out_dir(s);
  const auto plan = methods_of(s);
  const auto max_side = static_cast<std::size_t>(s.unsigned_integer("hungarian-max-side"));
  const auto source = s.str("source");
  if (source == "synth") {
    const auto cfg = synth_of(s);
    const auto data = generate(cfg);
    save_matrix(data.matrix, out / "baseline.cogm");
    save_gold(data.gold, out / "gold.tsv", cfg.describe());
    evaluate_methods(data.matrix, data.gold, plan, out, max_side, manifest);
    return;
  }
  if (source != "corpus") throw UsageError("--source must be corpus|synth, got '" + source + "'");

  const auto corpus = load_corpus(s);
  manifest.inputs = corpus.inputs;
  const auto split = split_seed(corpus.gold, s.real("seed-fraction"), s.unsigned_integer("seed"));
  save_gold(split.seed, out / "seed_pairs.tsv");
  save_gold(split.eval, out / "eval_pairs.tsv");
  const auto metrics = score_metrics(corpus, split, s, manifest);
  const auto weights =
      uniform_weights_requested(s) ? uniform_weights(metrics)
                                   : train_weights(metrics, split.seed, training_of(s));
  save_weights(weights, out / "weights.tsv");
  const auto baseline = without_seed(combine(metrics, weights), split.seed);
  save_matrix(baseline, out / "baseline.cogm");
  evaluate_methods(baseline, split.eval, plan, out, max_side, manifest);
}

struct Command {
  const char* name;
  const char* help;
  std::vector<std::vector<std::string>> option_groups;
  std::vector<std::string> extra;
  void (*body)(const Settings&, Manifest&);
};

const std::vector<Command>& commands() {
  static const std::vector<Command> kCommands{
      {"score", "compute one score matrix per metric", {kCommon, kCorpus}, {}, cmd_score},
      {"train", "learn metric weights from the seed pairs", {kCommon, kTraining}, {"in"}, cmd_train},
      {"combine", "weighted combination into the baseline matrix", {kCommon},
       {"in", "weights-file"}, cmd_combine},
      {"rescore", "apply rescoring methods to a matrix", {kCommon}, {"matrix"}, cmd_rescore},
      {"assign", "maximum one-to-one assignment of a matrix", {kCommon},
       {"matrix", "gold", "hungarian-max-side"}, cmd_assign},
      {"eval", "precision-recall evaluation of rescoring methods", {kCommon},
       {"matrix", "gold", "hungarian-max-side"}, cmd_eval},
      {"pipeline", "full run: score, train, combine, rescore, evaluate",
       {kCommon, kCorpus, kTraining, kSynth}, {"source", "hungarian-max-side"}, cmd_pipeline},
      {"synth", "generate a synthetic matrix and gold pairs", {kCommon, kSynth}, {},
       cmd_synth},
  };
  return kCommands;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"cogdetect: cognate detection with global-constraint rescoring"};
  app.require_subcommand(1);
  app.name(args.empty() ? "cogdetect" : args.front());

  struct Bound {
    const Command* command;
    CLI::App* app;
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& cmd : commands()) {
    auto b = std::make_unique<Bound>();
    b->command = &cmd;
    b->app = app.add_subcommand(cmd.name, cmd.help);
    std::vector<std::string> names;
    for (const auto& group : cmd.option_groups) names.insert(names.end(), group.begin(), group.end());
    names.insert(names.end(), cmd.extra.begin(), cmd.extra.end());
    for (const auto& name : names) {
      if (b->options.contains(name)) continue;
      const auto& spec = spec_of(name);
      auto* opt = b->app->add_option("--" + name, b->raw[name], spec.help)->type_name("VALUE");
      if (*spec.fallback) opt->default_str(spec.fallback);
      b->options[name] = opt;
    }
    bound.push_back(std::move(b));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& b : bound) {
    if (!b->app->parsed()) continue;
    try {
      Settings settings;
      for (const auto& [name, opt] : b->options) {
        if (*spec_of(name).fallback) settings.set(name, spec_of(name).fallback);
      }
      if (b->options.at("config")->count() > 0) {
        for (auto& [k, v] : read_config_file(b->raw.at("config"))) {
          if (!b->options.contains(k)) {
            throw UsageError("config key '" + k + "' is not an option of " + b->command->name);
          }
          settings.set(k, v);
        }
      }
      for (const auto& [name, opt] : b->options) {
        if (opt->count() > 0) settings.set(name, b->raw.at(name));
      }
      Manifest manifest;
      manifest.command = b->command->name;
      manifest.settings = settings.all();
      b->command->body(settings, manifest);
      manifest.write(fs::path(settings.str("out")) / "manifest.txt");
      return 0;
    } catch (const UsageError& e) {
      std::cerr << "cogdetect " << b->command->name << ": usage error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "cogdetect " << b->command->name << ": error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc)); }

}  // namespace cognates::cli
