#include "cognates/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cognates/error.hpp"
#include "cognates/text.hpp"
#include "line_reader.hpp"

namespace cognates {

Labels::Labels(std::vector<std::string> words) : words_(std::move(words)) {
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!index_.emplace(words_[i], i).second) {
      throw std::invalid_argument("duplicate label '" + words_[i] + "'");
    }
  }
}

std::optional<std::size_t> Labels::find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_finite(std::span<const double> scores) {
  for (std::size_t k = 0; k < scores.size(); ++k) {
    if (!std::isfinite(scores[k])) {
      throw std::invalid_argument("non-finite score at flat index " + std::to_string(k));
    }
  }
}

}  // namespace

ScoreMatrix::ScoreMatrix()
    : rows_(std::make_shared<const Labels>()), cols_(std::make_shared<const Labels>()) {}

ScoreMatrix::ScoreMatrix(std::vector<std::string> row_labels,
                         std::vector<std::string> col_labels, std::vector<double> scores)
    : ScoreMatrix(std::make_shared<const Labels>(std::move(row_labels)),
                  std::make_shared<const Labels>(std::move(col_labels)), std::move(scores)) {}

ScoreMatrix::ScoreMatrix(std::shared_ptr<const Labels> rows, std::shared_ptr<const Labels> cols,
                         std::vector<double> scores)
    : rows_(std::move(rows)), cols_(std::move(cols)), scores_(std::move(scores)) {
  if (!rows_ || !cols_) throw std::invalid_argument("null label axis");
  if (scores_.size() != rows_->size() * cols_->size()) {
    throw std::invalid_argument("score count " + std::to_string(scores_.size()) +
                                " does not match " + std::to_string(rows_->size()) + "x" +
                                std::to_string(cols_->size()));
  }
  check_finite(scores_);
}

double ScoreMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows() || j >= cols()) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range");
  }
  return (*this)(i, j);
}

bool ScoreMatrix::same_labels(const ScoreMatrix& other) const {
  return (rows_ == other.rows_ || *rows_ == *other.rows_) &&
         (cols_ == other.cols_ || *cols_ == *other.cols_);
}

ScoreMatrix ScoreMatrix::with_scores(std::vector<double> scores) const {
  return ScoreMatrix(rows_, cols_, std::move(scores));
}

ScoreMatrix ScoreMatrix::transposed() const {
  const std::size_t n1 = rows(), n2 = cols();
  std::vector<double> t(scores_.size());
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) t[j * n1 + i] = scores_[i * n2 + j];
  }
  return ScoreMatrix(cols_, rows_, std::move(t));
}

ScoreMatrix ScoreMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  std::vector<std::string> rl, cl;
  rl.reserve(rows.size());
  cl.reserve(cols.size());
  for (auto i : rows) rl.push_back(row_labels().words().at(i));
  for (auto j : cols) cl.push_back(col_labels().words().at(j));
  std::vector<double> s;
  s.reserve(rows.size() * cols.size());
  for (auto i : rows) {
    for (auto j : cols) s.push_back((*this)(i, j));
  }
  return ScoreMatrix(std::move(rl), std::move(cl), std::move(s));
}

std::vector<double> ScoreMatrix::release() && {
  auto out = std::move(scores_);
  scores_.clear();
  rows_ = std::make_shared<const Labels>();
  cols_ = std::make_shared<const Labels>();
  return out;
}

bool operator==(const ScoreMatrix& a, const ScoreMatrix& b) {
  return a.same_labels(b) && a.scores_ == b.scores_;
}

GoldPairs::GoldPairs(std::vector<Pair> pairs) {
  for (auto& [l1, l2] : pairs) add(std::move(l1), std::move(l2));
}

void GoldPairs::add(std::string l1, std::string l2) {
  const auto a = by_l1_.find(l1);
  const auto b = by_l2_.find(l2);
  if (a != by_l1_.end() && b != by_l2_.end() && a->second == l2) return;
  if (a != by_l1_.end()) {
    throw std::invalid_argument("gold pairs not one-to-one: '" + l1 + "' paired with both '" +
                                a->second + "' and '" + l2 + "'");
  }
  if (b != by_l2_.end()) {
    throw std::invalid_argument("gold pairs not one-to-one: '" + l2 + "' paired with both '" +
                                b->second + "' and '" + l1 + "'");
  }
  by_l1_.emplace(l1, l2);
  by_l2_.emplace(l2, l1);
  pairs_.emplace_back(std::move(l1), std::move(l2));
}

bool GoldPairs::contains(std::string_view l1, std::string_view l2) const {
  const auto it = by_l1_.find(std::string(l1));
  return it != by_l1_.end() && it->second == l2;
}

std::optional<std::string> GoldPairs::partner_of_l1(std::string_view l1) const {
  const auto it = by_l1_.find(std::string(l1));
  if (it == by_l1_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> GoldPairs::partner_of_l2(std::string_view l2) const {
  const auto it = by_l2_.find(std::string(l2));
  if (it == by_l2_.end()) return std::nullopt;
  return it->second;
}

ScoreMatrix normalize_min_max(const ScoreMatrix& m) {
  if (m.empty()) throw std::invalid_argument("empty matrix");
  const auto values = m.values();
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<double> out(values.size());
  if (lo == hi) {
    std::fill(out.begin(), out.end(), 0.5);
  } else {
    const double range = hi - lo;
    for (std::size_t k = 0; k < values.size(); ++k) out[k] = (values[k] - lo) / range;
  }
  return m.with_scores(std::move(out));
}

namespace {

void check_label(const std::string& label) {
  if (label.empty() || label.find_first_of("\t\n\r") != std::string::npos) {
    throw std::invalid_argument("label '" + label + "' is empty or contains tab/newline");
  }
}

}  // namespace

void write_matrix(std::ostream& out, const ScoreMatrix& m) {
  out << "#cogmatrix v1 " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t j = 0; j < m.cols(); ++j) {
    check_label(m.col_labels()[j]);
    if (j) out << '\t';
    out << m.col_labels()[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    check_label(m.row_labels()[i]);
    out << m.row_labels()[i];
    for (double s : m.row(i)) out << '\t' << text::format_shortest(s);
    out << '\n';
  }
}

ScoreMatrix read_matrix(std::istream& in, const std::string& source) {
  detail::LineReader reader(in, source);
  std::string line;
  if (!reader.next(line)) reader.fail("missing #cogmatrix header");
  const auto head = text::split(line, ' ');
  if (head.size() != 4 || head[0] != "#cogmatrix" || head[1] != "v1") {
    reader.fail("expected header '#cogmatrix v1 <n1> <n2>'");
  }
  const auto n1 = text::parse_int(head[2]);
  const auto n2 = text::parse_int(head[3]);
  if (!n1 || !n2 || *n1 < 0 || *n2 < 0) reader.fail("bad matrix dimensions in header");
  const auto rows = static_cast<std::size_t>(*n1);
  const auto cols = static_cast<std::size_t>(*n2);

  if (!reader.next(line)) reader.fail("missing column label line");
  std::vector<std::string> col_labels;
  if (cols > 0) {
    for (auto tok : text::split(line)) col_labels.emplace_back(tok);
  } else if (!line.empty()) {
    reader.fail("column labels present for a zero-column matrix");
  }
  if (col_labels.size() != cols) {
    reader.fail("expected " + std::to_string(cols) + " column labels, found " +
                std::to_string(col_labels.size()));
  }
  std::shared_ptr<const Labels> col_axis;
  try {
    col_axis = std::make_shared<const Labels>(std::move(col_labels));
  } catch (const std::invalid_argument& e) {
    reader.fail(e.what());
  }

  std::vector<std::string> row_labels;
  row_labels.reserve(rows);
  std::vector<double> scores;
  scores.reserve(rows * cols);
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(rows) + " rows");
    const auto fields = text::split(line);
    if (fields.size() != cols + 1) {
      reader.fail("expected " + std::to_string(cols + 1) + " fields, found " +
                  std::to_string(fields.size()));
    }
    std::string label(fields[0]);
    if (label.empty()) reader.fail("empty row label");
    if (!seen.emplace(label, i).second) reader.fail("duplicate row label '" + label + "'");
    for (std::size_t j = 1; j < fields.size(); ++j) {
      const auto v = text::parse_double(fields[j]);
      if (!v) reader.fail("column " + std::to_string(j) + ": bad score '" + std::string(fields[j]) + "'");
      if (!std::isfinite(*v)) reader.fail("column " + std::to_string(j) + ": non-finite score");
      scores.push_back(*v);
    }
    row_labels.push_back(std::move(label));
  }
  while (reader.next(line)) {
    if (!line.empty()) reader.fail("trailing data after last row");
  }
  return ScoreMatrix(std::make_shared<const Labels>(std::move(row_labels)), std::move(col_axis),
                     std::move(scores));
}

void save_matrix(const ScoreMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_matrix(out, m);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

ScoreMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_matrix(in, path.string());
}

void write_gold(std::ostream& out, const GoldPairs& gold, std::string_view comment) {
  if (!comment.empty()) out << '#' << comment << '\n';
  for (const auto& [l1, l2] : gold) {
    check_label(l1);
    check_label(l2);
    out << l1 << '\t' << l2 << '\n';
  }
}

GoldPairs read_gold(std::istream& in, const std::string& source) {
  detail::LineReader reader(in, source);
  GoldPairs gold;
  std::string line;
  while (reader.next_data(line)) {
    const auto fields = text::split(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      reader.fail("expected 'l1_word<TAB>l2_word'");
    }
    try {
      gold.add(std::string(fields[0]), std::string(fields[1]));
    } catch (const std::invalid_argument& e) {
      reader.fail(e.what());
    }
  }
  return gold;
}

void save_gold(const GoldPairs& gold, const std::filesystem::path& path,
               std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_gold(out, gold, comment);
}

GoldPairs load_gold(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_gold(in, path.string());
}

}  // namespace cognates
