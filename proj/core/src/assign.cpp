#include "cognates/assign.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "cognates/error.hpp"
#include "cognates/text.hpp"

namespace cognates {

double Assignment::total() const {
  double sum = 0.0;
  for (const auto& p : pairs) sum += p.score;
  return sum;
}

namespace {

// Minimum-cost assignment of every row of an n x m cost matrix (n <= m),
// shortest augmenting paths with potentials. cost(i, j) is 0-based.
// Returns the column of each row.
template <typename Cost>
std::vector<std::size_t> min_cost_rows(std::size_t n, std::size_t m, Cost&& cost) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);  // p[j]: row matched to column j
  std::vector<double> minv(m + 1);
  std::vector<char> used(m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace

Assignment hungarian_max(const ScoreMatrix& m, const HungarianOptions& options) {
  const std::size_t n1 = m.rows(), n2 = m.cols();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("assignment needs a non-empty matrix");
  if (std::max(n1, n2) > options.max_side) {
    throw ResourceError("assignment refused: " + std::to_string(n1) + "x" + std::to_string(n2) +
                        " exceeds the configured limit of " + std::to_string(options.max_side) +
                        " per side");
  }
  Assignment a;
  if (n1 <= n2) {
    const auto cols = min_cost_rows(n1, n2, [&](std::size_t i, std::size_t j) { return -m(i, j); });
    for (std::size_t i = 0; i < n1; ++i) a.pairs.push_back({i, cols[i], m(i, cols[i])});
  } else {
    // Assign every column instead; the transpose is never materialized.
    const auto rows = min_cost_rows(n2, n1, [&](std::size_t j, std::size_t i) { return -m(i, j); });
    for (std::size_t j = 0; j < n2; ++j) a.pairs.push_back({rows[j], j, m(rows[j], j)});
    std::sort(a.pairs.begin(), a.pairs.end(),
              [](const AssignedPair& x, const AssignedPair& y) { return x.row < y.row; });
  }
  check_assignment(m, a);
  return a;
}

void check_assignment(const ScoreMatrix& m, const Assignment& a) {
  if (a.pairs.size() != std::min(m.rows(), m.cols())) {
    throw std::logic_error("assignment size " + std::to_string(a.pairs.size()) +
                           " differs from min(n1, n2)");
  }
  std::vector<char> row_used(m.rows(), 0), col_used(m.cols(), 0);
  for (const auto& p : a.pairs) {
    if (p.row >= m.rows() || p.col >= m.cols()) throw std::logic_error("assignment out of range");
    if (row_used[p.row]++) throw std::logic_error("assignment repeats a row");
    if (col_used[p.col]++) throw std::logic_error("assignment repeats a column");
  }
}

PRCurve max_assignment_curve(const ScoreMatrix& m, const Assignment& a, const GoldPairs& gold) {
  if (gold.empty()) throw std::invalid_argument("gold set is empty");
  std::vector<AssignedPair> ranked = a.pairs;
  std::sort(ranked.begin(), ranked.end(), [&](const AssignedPair& x, const AssignedPair& y) {
    if (x.score != y.score) return x.score > y.score;
    const auto& rx = m.row_labels()[x.row];
    const auto& ry = m.row_labels()[y.row];
    if (rx != ry) return rx < ry;
    return m.col_labels()[x.col] < m.col_labels()[y.col];
  });
  PRCurve curve;
  const double top = ranked.empty() ? 0.0 : ranked.front().score;
  curve.points.push_back({std::nextafter(top, std::numeric_limits<double>::infinity()), 1.0, 0.0});
  std::size_t hits = 0;
  const double total = static_cast<double>(gold.size());
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    hits += gold.contains(m.row_labels()[ranked[k].row], m.col_labels()[ranked[k].col]);
    const double h = static_cast<double>(hits);
    curve.points.push_back({ranked[k].score, h / static_cast<double>(k + 1), h / total});
  }
  summarize(curve);
  return curve;
}

void write_assignment(std::ostream& out, const ScoreMatrix& m, const Assignment& a) {
  for (const auto& p : a.pairs) {
    out << m.row_labels()[p.row] << '\t' << m.col_labels()[p.col] << '\t'
        << text::format_shortest(p.score) << '\n';
  }
}

void save_assignment(const ScoreMatrix& m, const Assignment& a,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_assignment(out, m, a);
}

}  // namespace cognates
