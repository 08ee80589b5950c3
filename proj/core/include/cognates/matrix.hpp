#pragma once

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cognates {

/// Ordered, duplicate-free list of word identifiers along one matrix axis.
class Labels {
 public:
  Labels() = default;
  explicit Labels(std::vector<std::string> words);

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::string& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<std::string>& words() const noexcept { return words_; }
  std::optional<std::size_t> find(std::string_view word) const;

  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  friend bool operator==(const Labels& a, const Labels& b) { return a.words_ == b.words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Dense row-major matrix of pair scores. Rows are words of the first
/// language, columns words of the second. Every score is finite.
///
/// Instances are immutable; label axes are shared between matrices derived
/// from one another so rescoring a matrix does not copy its vocabularies.
class ScoreMatrix {
 public:
  ScoreMatrix();
  ScoreMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
              std::vector<double> scores);
  ScoreMatrix(std::shared_ptr<const Labels> rows, std::shared_ptr<const Labels> cols,
              std::vector<double> scores);

  std::size_t rows() const noexcept { return rows_->size(); }
  std::size_t cols() const noexcept { return cols_->size(); }
  std::size_t size() const noexcept { return scores_.size(); }
  bool empty() const noexcept { return scores_.empty(); }

  double operator()(std::size_t i, std::size_t j) const { return scores_[i * cols() + j]; }
  double at(std::size_t i, std::size_t j) const;
  std::span<const double> row(std::size_t i) const {
    return {scores_.data() + i * cols(), cols()};
  }
  std::span<const double> values() const noexcept { return scores_; }

  const Labels& row_labels() const noexcept { return *rows_; }
  const Labels& col_labels() const noexcept { return *cols_; }
  const std::shared_ptr<const Labels>& row_axis() const noexcept { return rows_; }
  const std::shared_ptr<const Labels>& col_axis() const noexcept { return cols_; }

  bool same_labels(const ScoreMatrix& other) const;

  /// Same labels, new scores (validated like the constructor).
  ScoreMatrix with_scores(std::vector<double> scores) const;
  ScoreMatrix transposed() const;
  ScoreMatrix submatrix(std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) const;

  /// Moves the score buffer out. The matrix is left empty.
  std::vector<double> release() &&;

  friend bool operator==(const ScoreMatrix& a, const ScoreMatrix& b);

 private:
  std::shared_ptr<const Labels> rows_;
  std::shared_ptr<const Labels> cols_;
  std::vector<double> scores_;
};

/// One-to-one reference relation between first- and second-language words.
class GoldPairs {
 public:
  using Pair = std::pair<std::string, std::string>;

  GoldPairs() = default;
  explicit GoldPairs(std::vector<Pair> pairs);
  GoldPairs(std::initializer_list<Pair> pairs) : GoldPairs(std::vector<Pair>(pairs)) {}

  /// Adds a pair. Re-adding an identical pair is a no-op; a pair that
  /// reuses either word with a different partner throws.
  void add(std::string l1, std::string l2);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(std::string_view l1, std::string_view l2) const;
  std::optional<std::string> partner_of_l1(std::string_view l1) const;
  std::optional<std::string> partner_of_l2(std::string_view l2) const;

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

 private:
  std::vector<Pair> pairs_;
  std::unordered_map<std::string, std::string> by_l1_;
  std::unordered_map<std::string, std::string> by_l2_;
};

/// Affine map of all scores onto [0,1]. A constant matrix maps to 0.5.
ScoreMatrix normalize_min_max(const ScoreMatrix& m);

// Matrix file format:
//   #cogmatrix v1 <n1> <n2>
//   <col label>\t<col label>...
//   <row label>\t<score>\t<score>...      (n1 lines)
// Scores are written as the shortest decimal that round-trips the double.
void write_matrix(std::ostream& out, const ScoreMatrix& m);
ScoreMatrix read_matrix(std::istream& in, const std::string& source = "<stream>");
void save_matrix(const ScoreMatrix& m, const std::filesystem::path& path);
ScoreMatrix load_matrix(const std::filesystem::path& path);

// Gold pairs: one `l1<TAB>l2` per line, `#` lines are comments.
void write_gold(std::ostream& out, const GoldPairs& gold, std::string_view comment = {});
GoldPairs read_gold(std::istream& in, const std::string& source = "<stream>");
void save_gold(const GoldPairs& gold, const std::filesystem::path& path,
               std::string_view comment = {});
GoldPairs load_gold(const std::filesystem::path& path);

}  // namespace cognates
