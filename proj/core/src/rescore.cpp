#include "cognates/rescore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "parallel.hpp"

namespace cognates {

std::string_view to_string(RescoreMethod method) {
  switch (method) {
    case RescoreMethod::baseline: return "baseline";
    case RescoreMethod::rr: return "rr";
    case RescoreMethod::fr: return "fr";
    case RescoreMethod::rr_fr_1step: return "rr_fr_1step";
    case RescoreMethod::rr_fr_2step: return "rr_fr_2step";
  }
  return "?";
}

RescoreMethod parse_rescore_method(std::string_view name) {
  for (auto m : {RescoreMethod::baseline, RescoreMethod::rr, RescoreMethod::fr,
                 RescoreMethod::rr_fr_1step, RescoreMethod::rr_fr_2step}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown rescore method '" + std::string(name) + "'");
}

std::uint32_t reverse_rank(const ScoreMatrix& m, std::size_t i, std::size_t j) {
  const double s = m.at(i, j);
  std::uint32_t count = 0;
  for (std::size_t k = 0; k < m.rows(); ++k) count += m(k, j) >= s;
  return count;
}

std::uint32_t forward_rank(const ScoreMatrix& m, std::size_t i, std::size_t j) {
  const double s = m.at(i, j);
  std::uint32_t count = 0;
  for (double v : m.row(i)) count += v >= s;
  return count;
}

namespace {

using Entry = std::pair<double, std::uint32_t>;

// ranks[k] = number of values >= values[k]. `scratch` is reused storage.
void rank_line(const double* values, std::size_t n, std::uint32_t* ranks,
               std::vector<Entry>& scratch) {
  scratch.resize(n);
  for (std::size_t k = 0; k < n; ++k) scratch[k] = {values[k], static_cast<std::uint32_t>(k)};
  std::sort(scratch.begin(), scratch.end(),
            [](const Entry& a, const Entry& b) { return a.first > b.first; });
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && scratch[end].first == scratch[start].first) ++end;
    const auto rank = static_cast<std::uint32_t>(end);
    for (std::size_t k = start; k < end; ++k) ranks[scratch[k].second] = rank;
    start = end;
  }
}

constexpr std::size_t kColumnBlock = 32;

// Calls sink(i, j, rank) for every cell with its column rank. Columns are
// processed in blocks so that the gather reads contiguous row segments.
template <typename Sink>
void for_each_column_rank(std::span<const double> s, std::size_t n1, std::size_t n2, Sink&& sink) {
  const std::size_t blocks = (n2 + kColumnBlock - 1) / kColumnBlock;
  detail::parallel_for(blocks, [&](std::size_t b_begin, std::size_t b_end) {
    std::vector<double> cols(kColumnBlock * n1);
    std::vector<std::uint32_t> ranks(kColumnBlock * n1);
    std::vector<Entry> scratch;
    for (std::size_t b = b_begin; b < b_end; ++b) {
      const std::size_t j0 = b * kColumnBlock;
      const std::size_t width = std::min(kColumnBlock, n2 - j0);
      for (std::size_t i = 0; i < n1; ++i) {
        const double* src = s.data() + i * n2 + j0;
        for (std::size_t c = 0; c < width; ++c) cols[c * n1 + i] = src[c];
      }
      for (std::size_t c = 0; c < width; ++c) {
        rank_line(cols.data() + c * n1, n1, ranks.data() + c * n1, scratch);
      }
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t c = 0; c < width; ++c) sink(i, j0 + c, ranks[c * n1 + i]);
      }
    }
  }, 1);
}

// Calls sink(i, row_ranks) for every row; row_ranks is only valid during the call.
template <typename Sink>
void for_each_row_rank(std::span<const double> s, std::size_t n1, std::size_t n2, Sink&& sink) {
  detail::parallel_for(n1, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> ranks(n2);
    std::vector<Entry> scratch;
    for (std::size_t i = begin; i < end; ++i) {
      rank_line(s.data() + i * n2, n2, ranks.data(), scratch);
      sink(i, std::span<const std::uint32_t>(ranks));
    }
  }, 16);
}

void require_non_negative(const ScoreMatrix& m) {
  for (double v : m.values()) {
    if (v < 0.0) throw std::invalid_argument("rescoring requires non-negative scores");
  }
}

// In place: s(i,j) /= forward rank of s(i,j) within its (current) row.
void divide_by_row_ranks(std::vector<double>& s, std::size_t n1, std::size_t n2) {
  for_each_row_rank(s, n1, n2, [&](std::size_t i, std::span<const std::uint32_t> ranks) {
    double* row = s.data() + i * n2;
    for (std::size_t j = 0; j < n2; ++j) row[j] /= static_cast<double>(ranks[j]);
  });
}

}  // namespace

std::vector<std::uint32_t> reverse_ranks(const ScoreMatrix& m) {
  const std::size_t n1 = m.rows(), n2 = m.cols();
  std::vector<std::uint32_t> out(m.size());
  for_each_column_rank(m.values(), n1, n2, [&](std::size_t i, std::size_t j, std::uint32_t r) {
    out[i * n2 + j] = r;
  });
  return out;
}

std::vector<std::uint32_t> forward_ranks(const ScoreMatrix& m) {
  const std::size_t n1 = m.rows(), n2 = m.cols();
  std::vector<std::uint32_t> out(m.size());
  for_each_row_rank(m.values(), n1, n2, [&](std::size_t i, std::span<const std::uint32_t> r) {
    std::copy(r.begin(), r.end(), out.begin() + static_cast<std::ptrdiff_t>(i * n2));
  });
  return out;
}

ScoreMatrix rescore_rr(const ScoreMatrix& m) {
  require_non_negative(m);
  const std::size_t n1 = m.rows(), n2 = m.cols();
  const auto s = m.values();
  std::vector<double> out(m.size());
  for_each_column_rank(s, n1, n2, [&](std::size_t i, std::size_t j, std::uint32_t r) {
    out[i * n2 + j] = s[i * n2 + j] / static_cast<double>(r);
  });
  return m.with_scores(std::move(out));
}

ScoreMatrix rescore_fr(const ScoreMatrix& m) {
  require_non_negative(m);
  std::vector<double> out(m.values().begin(), m.values().end());
  divide_by_row_ranks(out, m.rows(), m.cols());
  return m.with_scores(std::move(out));
}

ScoreMatrix rescore_rr_fr_1step(const ScoreMatrix& m) {
  require_non_negative(m);
  const std::size_t n1 = m.rows(), n2 = m.cols();
  const auto s = m.values();
  const auto rev = reverse_ranks(m);
  std::vector<double> out(m.size());
  for_each_row_rank(s, n1, n2, [&](std::size_t i, std::span<const std::uint32_t> fwd) {
    for (std::size_t j = 0; j < n2; ++j) {
      const std::size_t k = i * n2 + j;
      const double product = static_cast<double>(rev[k]) * static_cast<double>(fwd[j]);
      out[k] = s[k] / product;
    }
  });
  return m.with_scores(std::move(out));
}

ScoreMatrix rescore_rr_fr_2step(const ScoreMatrix& m) {
  auto step1 = rescore_rr(m);
  const std::size_t n1 = step1.rows(), n2 = step1.cols();
  auto rows = step1.row_axis();
  auto cols = step1.col_axis();
  auto s = std::move(step1).release();
  divide_by_row_ranks(s, n1, n2);
  return ScoreMatrix(std::move(rows), std::move(cols), std::move(s));
}

ScoreMatrix apply(RescoreMethod method, const ScoreMatrix& m) {
  switch (method) {
    case RescoreMethod::baseline: return m;
    case RescoreMethod::rr: return rescore_rr(m);
    case RescoreMethod::fr: return rescore_fr(m);
    case RescoreMethod::rr_fr_1step: return rescore_rr_fr_1step(m);
    case RescoreMethod::rr_fr_2step: return rescore_rr_fr_2step(m);
  }
  throw std::invalid_argument("unknown rescore method");
}

}  // namespace cognates
