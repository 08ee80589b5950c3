#include "cognates/combine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "cognates/error.hpp"
#include "cognates/text.hpp"
#include "line_reader.hpp"

namespace cognates {

void TrainingConfig::validate() const {
  if (!(regularization > 0.0) || !std::isfinite(regularization)) {
    throw std::invalid_argument("training regularization must be positive");
  }
  if (epochs <= 0) throw std::invalid_argument("training epochs must be positive");
  if (negative_ratio <= 0) throw std::invalid_argument("negative_ratio must be positive");
}

namespace {

const ScoreMatrix& reference(const MetricMatrices& metrics) {
  if (metrics.empty()) throw std::invalid_argument("no metric matrices given");
  const auto& ref = metrics.begin()->second;
  for (const auto& [id, m] : metrics) {
    if (!m.same_labels(ref)) {
      throw std::invalid_argument("metric matrix '" + std::string(to_string(id)) +
                                  "' has different labels");
    }
  }
  return ref;
}

struct Example {
  std::vector<double> x;
  double y;
};

// Objective: lambda/2 |w|^2 + mean hinge. Bias is not regularized.
double objective(const std::vector<Example>& data, const std::vector<double>& w, double b,
                 double lambda) {
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (const auto& e : data) {
    double f = b;
    for (std::size_t k = 0; k < w.size(); ++k) f += w[k] * e.x[k];
    loss += std::max(0.0, 1.0 - e.y * f);
  }
  return 0.5 * lambda * reg + loss / static_cast<double>(data.size());
}

}  // namespace

WeightVector train_weights(const MetricMatrices& metrics, const GoldPairs& seed,
                           const TrainingConfig& cfg) {
  cfg.validate();
  const auto& ref = reference(metrics);
  if (seed.empty()) throw std::invalid_argument("seed set is empty");

  std::vector<std::pair<std::size_t, std::size_t>> positives;
  std::string missing;
  for (const auto& [l1, l2] : seed) {
    const auto i = ref.row_labels().find(l1);
    const auto j = ref.col_labels().find(l2);
    if (!i || !j) {
      missing += (missing.empty() ? "" : ", ") + l1 + "/" + l2;
      continue;
    }
    positives.emplace_back(*i, *j);
  }
  if (!missing.empty()) throw std::invalid_argument("seed pairs not in universe: " + missing);

  std::unordered_set<std::size_t> seed_rows, seed_cols;
  for (auto [i, j] : positives) {
    seed_rows.insert(i);
    seed_cols.insert(j);
  }
  std::vector<std::size_t> free_rows, free_cols;
  for (std::size_t i = 0; i < ref.rows(); ++i) if (!seed_rows.contains(i)) free_rows.push_back(i);
  for (std::size_t j = 0; j < ref.cols(); ++j) if (!seed_cols.contains(j)) free_cols.push_back(j);

  std::mt19937_64 rng(cfg.rng_seed);
  std::vector<std::pair<std::size_t, std::size_t>> negatives;
  if (!free_rows.empty() && !free_cols.empty()) {
    const std::size_t pool = free_rows.size() * free_cols.size();
    const std::size_t wanted =
        std::min(pool, positives.size() * static_cast<std::size_t>(cfg.negative_ratio));
    std::set<std::size_t> chosen;
    std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
    while (chosen.size() < wanted) {
      const auto k = pick(rng);
      if (chosen.insert(k).second) {
        negatives.emplace_back(free_rows[k / free_cols.size()], free_cols[k % free_cols.size()]);
      }
    }
  }
  if (negatives.empty()) throw std::invalid_argument("no negative pairs available for training");

  std::vector<MetricId> ids;
  for (const auto& [id, m] : metrics) ids.push_back(id);
  const auto features = [&](std::size_t i, std::size_t j) {
    std::vector<double> x;
    x.reserve(ids.size());
    for (auto id : ids) x.push_back(metrics.at(id)(i, j));
    return x;
  };
  std::vector<Example> data;
  for (auto [i, j] : positives) data.push_back({features(i, j), 1.0});
  for (auto [i, j] : negatives) data.push_back({features(i, j), -1.0});

  // Full-batch subgradient descent with a 1/sqrt(t) step; the best iterate
  // by objective is returned, as subgradient steps are not monotone.
  const std::size_t dim = ids.size();
  const double lambda = cfg.regularization;
  const double n = static_cast<double>(data.size());
  std::vector<double> w(dim, 0.0), best_w = w;
  double b = 0.0, best_b = 0.0;
  double best_obj = objective(data, w, b, lambda);
  std::vector<double> grad(dim);
  for (int t = 1; t <= cfg.epochs; ++t) {
    for (std::size_t k = 0; k < dim; ++k) grad[k] = lambda * w[k];
    double grad_b = 0.0;
    for (const auto& e : data) {
      double f = b;
      for (std::size_t k = 0; k < dim; ++k) f += w[k] * e.x[k];
      if (e.y * f < 1.0) {
        for (std::size_t k = 0; k < dim; ++k) grad[k] -= e.y * e.x[k] / n;
        grad_b -= e.y / n;
      }
    }
    const double step = 1.0 / std::sqrt(static_cast<double>(t));
    for (std::size_t k = 0; k < dim; ++k) w[k] -= step * grad[k];
    b -= step * grad_b;
    const double obj = objective(data, w, b, lambda);
    if (obj < best_obj) {
      best_obj = obj;
      best_w = w;
      best_b = b;
    }
  }

  WeightVector out;
  for (std::size_t k = 0; k < dim; ++k) out.weights[ids[k]] = best_w[k];
  out.bias = best_b;
  return out;
}

WeightVector uniform_weights(const MetricMatrices& metrics) {
  WeightVector w;
  for (const auto& [id, m] : metrics) w.weights[id] = 1.0;
  return w;
}

ScoreMatrix weighted_sum(const MetricMatrices& metrics, const WeightVector& weights) {
  const auto& ref = reference(metrics);
  for (const auto& [id, m] : metrics) {
    if (!weights.weights.contains(id)) {
      throw std::invalid_argument("no weight for metric '" + std::string(to_string(id)) + "'");
    }
  }
  std::vector<double> out(ref.size(), weights.bias);
  for (const auto& [id, m] : metrics) {
    const double w = weights.weights.at(id);
    const auto v = m.values();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += w * v[k];
  }
  return ref.with_scores(std::move(out));
}

ScoreMatrix combine(const MetricMatrices& metrics, const WeightVector& weights) {
  return normalize_min_max(weighted_sum(metrics, weights));
}

void write_weights(std::ostream& out, const WeightVector& w) {
  out << "#bias " << text::format_shortest(w.bias) << '\n';
  for (const auto& [id, v] : w.weights) out << to_string(id) << '\t' << text::format_shortest(v) << '\n';
}

WeightVector read_weights(std::istream& in, const std::string& source) {
  detail::LineReader reader(in, source);
  WeightVector w;
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind("#bias", 0) == 0) {
        const auto parts = text::split(line, ' ');
        const auto v = parts.size() == 2 ? text::parse_double(parts[1]) : std::nullopt;
        if (!v || !std::isfinite(*v)) reader.fail("expected '#bias <b>'");
        w.bias = *v;
      }
      continue;
    }
    const auto fields = text::split(line);
    if (fields.size() != 2) reader.fail("expected 'metric<TAB>weight'");
    MetricId id;
    try {
      id = parse_metric(fields[0]);
    } catch (const std::invalid_argument& e) {
      reader.fail(e.what());
    }
    const auto v = text::parse_double(fields[1]);
    if (!v || !std::isfinite(*v)) reader.fail("bad weight '" + std::string(fields[1]) + "'");
    if (!w.weights.emplace(id, *v).second) reader.fail("duplicate metric");
  }
  return w;
}

void save_weights(const WeightVector& w, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_weights(out, w);
}

WeightVector load_weights(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_weights(in, path.string());
}

}  // namespace cognates
