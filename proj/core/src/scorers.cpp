#include "cognates/scorers.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <new>
#include <numeric>
#include <stdexcept>

#include "cognates/text.hpp"
#include "parallel.hpp"

namespace cognates {

std::string_view to_string(MetricId id) {
  switch (id) {
    case MetricId::context: return "context";
    case MetricId::frequency: return "frequency";
    case MetricId::temporal: return "temporal";
    case MetricId::burstiness: return "burstiness";
    case MetricId::phonetic: return "phonetic";
  }
  return "?";
}

MetricId parse_metric(std::string_view name) {
  for (auto id : kAllMetrics) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

SeedLexicon::SeedLexicon(const GoldPairs& seed) {
  for (const auto& [l1, l2] : seed) {
    l2_to_l1_.emplace(l2, l1);
    dims_.push_back(l1);
  }
  std::sort(dims_.begin(), dims_.end());
}

const std::string* SeedLexicon::translate(std::string_view l2_word) const {
  const auto it = l2_to_l1_.find(std::string(l2_word));
  return it == l2_to_l1_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// phonetic

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

double ned_similarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

}  // namespace

double phonetic_score(std::string_view w1, std::string_view w2) {
  return ned_similarity(text::decode_utf8(w1), text::decode_utf8(w2));
}

// ---------------------------------------------------------------------------
// frequency / burstiness

double ratio_similarity(double a, double b) {
  if (a == 0.0 && b == 0.0) return 1.0;
  if (a == 0.0 || b == 0.0) return 0.0;
  return std::min(a, b) / std::max(a, b);
}

double fano_factor(std::span<const std::uint32_t> series) {
  if (series.empty()) return 0.0;
  const double n = static_cast<double>(series.size());
  double sum = 0.0;
  for (auto c : series) sum += c;
  if (sum == 0.0) return 0.0;
  const double mean = sum / n;
  double ss = 0.0;
  for (auto c : series) ss += (c - mean) * (c - mean);
  return (ss / n) / mean;
}

double frequency_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                       const LexiconSide& lex2) {
  return ratio_similarity(lex1.relative_frequency(w1), lex2.relative_frequency(w2));
}

double burstiness_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                        const LexiconSide& lex2) {
  return ratio_similarity(fano_factor(lex1.daily_counts(w1)), fano_factor(lex2.daily_counts(w2)));
}

// ---------------------------------------------------------------------------
// temporal

namespace {

// One r2c plan with its own aligned buffers, reused while the series length
// stays the same. Each thread keeps its own, so only planning is locked.
class SpectrumPlan {
 public:
  explicit SpectrumPlan(std::size_t n)
      : n_(n),
        in_(fftw_alloc_real(n)),
        out_(fftw_alloc_complex(n / 2 + 1)) {
    if (!in_ || !out_) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_, out_, FFTW_ESTIMATE);
  }
  SpectrumPlan(const SpectrumPlan&) = delete;
  SpectrumPlan& operator=(const SpectrumPlan&) = delete;
  ~SpectrumPlan() {
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(in_);
    fftw_free(out_);
  }

  std::size_t size() const noexcept { return n_; }

  std::vector<double> magnitudes(std::span<const std::uint32_t> series) {
    std::copy(series.begin(), series.end(), in_);
    fftw_execute(plan_);
    std::vector<double> mags(n_ / 2);
    for (std::size_t k = 1; k <= n_ / 2; ++k) mags[k - 1] = std::hypot(out_[k][0], out_[k][1]);
    return mags;
  }

 private:
  static std::mutex& planner_mutex() {
    static std::mutex m;  // FFTW planning is not thread-safe
    return m;
  }

  std::size_t n_;
  double* in_;
  fftw_complex* out_;
  fftw_plan plan_ = nullptr;
};

}  // namespace

std::vector<double> dft_magnitudes(std::span<const std::uint32_t> series) {
  const std::size_t n = series.size();
  if (n < 2) return {};
  thread_local std::unique_ptr<SpectrumPlan> plan;
  if (!plan || plan->size() != n) {
    plan.reset();
    plan = std::make_unique<SpectrumPlan>(n);
  }
  return plan->magnitudes(series);
}

namespace {

// Centered average ranks of one vector plus their sum of squares. A profile
// with zero spread means the input was constant.
struct RankProfile {
  std::vector<double> centered;
  double spread = 0.0;
};

RankProfile rank_profile(std::span<const double> v, double tie_tolerance) {
  const std::size_t n = v.size();
  RankProfile p;
  p.centered.assign(n, 0.0);
  if (n == 0) return p;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && v[idx[end]] - v[idx[end - 1]] <= tie_tolerance) ++end;
    // Positions start..end-1 hold 1-based ranks start+1..end.
    const double avg = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k) p.centered[idx[k]] = avg;
    start = end;
  }
  const double mean = 0.5 * static_cast<double>(n + 1);
  for (auto& r : p.centered) {
    r -= mean;
    p.spread += r * r;
  }
  return p;
}

double correlate(const RankProfile& a, const RankProfile& b) {
  if (a.centered.size() != b.centered.size()) {
    throw std::invalid_argument("rank correlation needs equal-length vectors");
  }
  if (a.spread == 0.0 || b.spread == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t k = 0; k < a.centered.size(); ++k) dot += a.centered[k] * b.centered[k];
  return std::clamp(dot / std::sqrt(a.spread * b.spread), -1.0, 1.0);
}

// Spectral magnitudes that differ by less than this fraction of the series
// mass are rank ties. Keeps floating-point noise (e.g. the near-zero bins of
// a constant series) from producing spurious orderings, and makes the
// ranking invariant to rescaling the series.
constexpr double kSpectrumTieFraction = 1e-9;

RankProfile temporal_profile(std::span<const std::uint32_t> series) {
  const auto mags = dft_magnitudes(series);
  double mass = 0.0;
  for (auto c : series) mass += c;
  for (auto m : mags) mass = std::max(mass, m);
  return rank_profile(mags, kSpectrumTieFraction * mass);
}

void check_days(const LexiconSide& lex1, const LexiconSide& lex2) {
  if (lex1.days != lex2.days) {
    throw std::invalid_argument("temporal metric needs equal series lengths, got " +
                                std::to_string(lex1.days) + " and " + std::to_string(lex2.days));
  }
  if (lex1.days < 4) throw std::invalid_argument("temporal metric needs at least 4 days");
}

double rescale_correlation(double rho) { return (rho + 1.0) / 2.0; }

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b, double tie_tolerance_a,
                double tie_tolerance_b) {
  return correlate(rank_profile(a, tie_tolerance_a), rank_profile(b, tie_tolerance_b));
}

double temporal_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                      const LexiconSide& lex2) {
  check_days(lex1, lex2);
  return rescale_correlation(
      correlate(temporal_profile(lex1.daily_counts(w1)), temporal_profile(lex2.daily_counts(w2))));
}

// ---------------------------------------------------------------------------
// context

namespace {

struct ContextMarginals {
  std::unordered_map<std::string, double> head;     // sum over contexts per word
  std::unordered_map<std::string, double> context;  // sum over words per context
  double total = 0.0;

  explicit ContextMarginals(const LexiconSide& lex) {
    for (const auto& [w, profile] : lex.cooc) {
      double row = 0.0;
      for (const auto& [u, c] : profile) {
        row += static_cast<double>(c);
        context[u] += static_cast<double>(c);
      }
      head[w] = row;
      total += row;
    }
  }

  double ppmi(const std::string& w, const std::string& u, std::uint64_t count) const {
    if (count == 0) return 0.0;
    const double joint = static_cast<double>(count);
    const double pmi = std::log(joint * total / (head.at(w) * context.at(u)));
    return pmi > 0.0 ? pmi : 0.0;
  }
};

std::vector<double> l1_context_vector(const std::string& w, const LexiconSide& lex,
                                      const ContextMarginals& marg, const SeedLexicon& bridge) {
  const auto& dims = bridge.dimensions();
  std::vector<double> v(dims.size(), 0.0);
  const auto& profile = lex.context_of(w);
  if (profile.empty()) return v;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    const auto it = profile.find(dims[d]);
    if (it != profile.end()) v[d] = marg.ppmi(w, it->first, it->second);
  }
  return v;
}

std::vector<double> l2_context_vector(const std::string& w, const LexiconSide& lex,
                                      const ContextMarginals& marg, const SeedLexicon& bridge) {
  const auto& dims = bridge.dimensions();
  std::vector<double> v(dims.size(), 0.0);
  for (const auto& [u, c] : lex.context_of(w)) {
    const auto* target = bridge.translate(u);
    if (!target) continue;
    const auto d = static_cast<std::size_t>(
        std::lower_bound(dims.begin(), dims.end(), *target) - dims.begin());
    v[d] = marg.ppmi(w, u, c);
  }
  return v;
}

double squared_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (auto x : v) s += x * x;
  return s;
}

double cosine(const std::vector<double>& a, double a_sq, const std::vector<double>& b,
              double b_sq) {
  if (a_sq == 0.0 || b_sq == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
  return std::clamp(dot / std::sqrt(a_sq * b_sq), 0.0, 1.0);
}

void require_bridge(const SeedLexicon& bridge) {
  if (bridge.empty()) throw std::invalid_argument("context metric requires seed lexicon");
}

}  // namespace

double context_score(std::string_view w1, const LexiconSide& lex1, std::string_view w2,
                     const LexiconSide& lex2, const SeedLexicon& bridge) {
  require_bridge(bridge);
  const ContextMarginals m1(lex1), m2(lex2);
  const auto a = l1_context_vector(std::string(w1), lex1, m1, bridge);
  const auto b = l2_context_vector(std::string(w2), lex2, m2, bridge);
  return cosine(a, squared_norm(a), b, squared_norm(b));
}

// ---------------------------------------------------------------------------
// all pairs

namespace {

template <typename RowFeature, typename ColFeature, typename Pair>
std::vector<double> fill_pairs(std::size_t n1, std::size_t n2, RowFeature&& row_feature,
                               ColFeature&& col_feature, Pair&& pair) {
  using R = decltype(row_feature(std::size_t{}));
  using C = decltype(col_feature(std::size_t{}));
  std::vector<R> rf;
  std::vector<C> cf;
  rf.reserve(n1);
  cf.reserve(n2);
  for (std::size_t i = 0; i < n1; ++i) rf.push_back(row_feature(i));
  for (std::size_t j = 0; j < n2; ++j) cf.push_back(col_feature(j));
  std::vector<double> out(n1 * n2);
  detail::parallel_for(n1, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n2; ++j) out[i * n2 + j] = pair(rf[i], cf[j]);
    }
  }, 8);
  return out;
}

struct NormedVector {
  std::vector<double> v;
  double sq = 0.0;
};

}  // namespace

ScoreMatrix score_all_pairs(MetricId metric, const std::vector<std::string>& x,
                            const std::vector<std::string>& y, const LexiconSide& lex1,
                            const LexiconSide& lex2, const SeedLexicon& bridge) {
  const std::size_t n1 = x.size(), n2 = y.size();
  std::vector<double> scores;
  switch (metric) {
    case MetricId::phonetic:
      scores = fill_pairs(
          n1, n2, [&](std::size_t i) { return text::decode_utf8(x[i]); },
          [&](std::size_t j) { return text::decode_utf8(y[j]); },
          [](const std::u32string& a, const std::u32string& b) { return ned_similarity(a, b); });
      break;
    case MetricId::frequency:
      scores = fill_pairs(
          n1, n2, [&](std::size_t i) { return lex1.relative_frequency(x[i]); },
          [&](std::size_t j) { return lex2.relative_frequency(y[j]); }, ratio_similarity);
      break;
    case MetricId::burstiness:
      scores = fill_pairs(
          n1, n2, [&](std::size_t i) { return fano_factor(lex1.daily_counts(x[i])); },
          [&](std::size_t j) { return fano_factor(lex2.daily_counts(y[j])); }, ratio_similarity);
      break;
    case MetricId::temporal:
      check_days(lex1, lex2);
      scores = fill_pairs(
          n1, n2, [&](std::size_t i) { return temporal_profile(lex1.daily_counts(x[i])); },
          [&](std::size_t j) { return temporal_profile(lex2.daily_counts(y[j])); },
          [](const RankProfile& a, const RankProfile& b) {
            return rescale_correlation(correlate(a, b));
          });
      break;
    case MetricId::context: {
      require_bridge(bridge);
      const ContextMarginals m1(lex1), m2(lex2);
      scores = fill_pairs(
          n1, n2,
          [&](std::size_t i) {
            NormedVector nv{l1_context_vector(x[i], lex1, m1, bridge), 0.0};
            nv.sq = squared_norm(nv.v);
            return nv;
          },
          [&](std::size_t j) {
            NormedVector nv{l2_context_vector(y[j], lex2, m2, bridge), 0.0};
            nv.sq = squared_norm(nv.v);
            return nv;
          },
          [](const NormedVector& a, const NormedVector& b) { return cosine(a.v, a.sq, b.v, b.sq); });
      break;
    }
  }
  return ScoreMatrix(x, y, std::move(scores));
}

}  // namespace cognates
