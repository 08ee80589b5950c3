#include "cognates/evaluate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "cognates/error.hpp"
#include "cognates/text.hpp"

namespace cognates {

namespace {

double f1(const CurvePoint& p) {
  const double denom = p.precision + p.recall;
  return denom == 0.0 ? 0.0 : 2.0 * p.precision * p.recall / denom;
}

}  // namespace

void summarize(PRCurve& curve) {
  curve.max_f1 = max_f1(curve);
  curve.iap11 = curve.points.empty() ? 0.0 : iap11(curve);
}

PRCurve curve_from_ranking(std::span<const RankedItem> ranked, std::size_t gold_total) {
  if (gold_total == 0) throw std::invalid_argument("gold set is empty");
  std::size_t last_hit = 0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    if (ranked[k].gold) last_hit = k + 1;
  }
  PRCurve curve;
  curve.points.reserve(last_hit);
  std::size_t hits = 0;
  const double total = static_cast<double>(gold_total);
  for (std::size_t k = 0; k < last_hit; ++k) {
    hits += ranked[k].gold;
    const double h = static_cast<double>(hits);
    curve.points.push_back(
        {ranked[k].score, h / static_cast<double>(k + 1), h / total});
  }
  summarize(curve);
  return curve;
}

PRCurve pr_curve(const ScoreMatrix& m, const GoldPairs& gold) {
  const std::size_t n1 = m.rows(), n2 = m.cols();
  if (m.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("pr_curve: more than 2^32-1 candidate pairs");
  }
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> gold_col(n1, kNone);
  std::size_t present = 0;
  for (const auto& [l1, l2] : gold) {
    const auto i = m.row_labels().find(l1);
    const auto j = m.col_labels().find(l2);
    if (i && j) {
      gold_col[*i] = *j;
      ++present;
    }
  }
  if (present == 0) throw std::invalid_argument("no gold pairs in the candidate universe");

  // Label order for tie-breaking.
  const auto label_order = [](const Labels& labels) {
    std::vector<std::uint32_t> idx(labels.size()), order(labels.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](auto a, auto b) { return labels[a] < labels[b]; });
    for (std::uint32_t k = 0; k < idx.size(); ++k) order[idx[k]] = k;
    return order;
  };
  const auto row_order = label_order(m.row_labels());
  const auto col_order = label_order(m.col_labels());

  // Cells below the lowest-scoring gold cell rank after the last hit and
  // would be truncated anyway, so they are never sorted.
  const auto s = m.values();
  double floor_score = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n1; ++i) {
    if (gold_col[i] != kNone) floor_score = std::min(floor_score, s[i * n2 + gold_col[i]]);
  }

  // Descending score as an unsigned key: flipping the sign bit (or every
  // bit of a negative) makes unsigned order agree with double order.
  const auto descending_key = [](double v) {
    if (v == 0.0) v = 0.0;  // -0.0 ties with +0.0
    const auto bits = std::bit_cast<std::uint64_t>(v);
    const std::uint64_t ascending = (bits >> 63) ? ~bits : bits | (std::uint64_t{1} << 63);
    return ~ascending;
  };
  struct Cell {
    std::uint64_t key;
    std::uint32_t index;
  };
  std::vector<Cell> cells;
  for (std::uint32_t k = 0; k < s.size(); ++k) {
    if (s[k] >= floor_score) cells.push_back({descending_key(s[k]), k});
  }
  std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
    if (a.key != b.key) return a.key < b.key;
    const auto ra = row_order[a.index / n2], rb = row_order[b.index / n2];
    if (ra != rb) return ra < rb;
    return col_order[a.index % n2] < col_order[b.index % n2];
  });

  std::vector<RankedItem> ranked(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t i = cells[k].index / n2, j = cells[k].index % n2;
    ranked[k] = {s[cells[k].index], gold_col[i] == j};
  }
  return curve_from_ranking(ranked, gold.size());
}

double interpolated_precision(const PRCurve& curve, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument("recall level must lie in [0,1]");
  }
  if (curve.points.empty()) throw std::invalid_argument("empty precision-recall curve");
  double best = 0.0;
  for (const auto& p : curve.points) {
    if (p.recall >= r) best = std::max(best, p.precision);
  }
  return best;
}

double iap11(const PRCurve& curve) {
  double sum = 0.0;
  for (int k = 0; k <= 10; ++k) sum += interpolated_precision(curve, k / 10.0);
  return sum / 11.0;
}

double max_f1(const PRCurve& curve) {
  double best = 0.0;
  for (const auto& p : curve.points) best = std::max(best, f1(p));
  return best;
}

Report compare_methods(const std::vector<std::pair<std::string, ScoreMatrix>>& matrices,
                       const GoldPairs& gold) {
  Report report;
  for (const auto& [name, m] : matrices) {
    if (!matrices.empty() && !m.same_labels(matrices.front().second)) {
      throw std::invalid_argument("method '" + name + "' has different labels");
    }
    auto curve = pr_curve(m, gold);
    report.rows.push_back({name, curve.max_f1, curve.iap11});
    report.curves.push_back(std::move(curve));
  }
  return report;
}

void write_report(std::ostream& out, const Report& report) {
  out << "#method\tmaxf1\tiap11\n";
  for (const auto& row : report.rows) {
    out << row.method << '\t' << text::format_fixed(row.max_f1, 4) << '\t'
        << text::format_fixed(row.iap11, 4) << '\n';
  }
}

void write_curve(std::ostream& out, const PRCurve& curve, const std::string& method) {
  out << "#prcurve v1 method=" << method << '\n';
  for (const auto& p : curve.points) {
    out << text::format_shortest(p.threshold) << '\t' << text::format_shortest(p.precision) << '\t'
        << text::format_shortest(p.recall) << '\n';
  }
}

}  // namespace cognates
