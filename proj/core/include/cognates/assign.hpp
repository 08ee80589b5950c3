#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "cognates/evaluate.hpp"
#include "cognates/matrix.hpp"

namespace cognates {

struct AssignedPair {
  std::size_t row = 0;
  std::size_t col = 0;
  double score = 0.0;

  friend bool operator==(const AssignedPair&, const AssignedPair&) = default;
};

/// One-to-one set of matrix cells; no row or column repeats.
struct Assignment {
  std::vector<AssignedPair> pairs;  // ordered by row index

  /// Sum of pair scores in row order.
  double total() const;
};

struct HungarianOptions {
  /// Refuse matrices with more rows or columns than this.
  std::size_t max_side = 20000;
};

/// Maximum-total one-to-one assignment (Hungarian algorithm with row and
/// column potentials). Rectangular matrices assign every cell of the short
/// side, so |result| = min(n1, n2). O(min^2 * max) time.
Assignment hungarian_max(const ScoreMatrix& m, const HungarianOptions& options = {});

/// Throws std::logic_error if `a` repeats a row or column or has the wrong
/// size for `m`.
void check_assignment(const ScoreMatrix& m, const Assignment& a);

/// Precision-recall trace along the assignment: pairs are ranked by score
/// (ties by row label, then column label) and the threshold raised from
/// below the lowest to above the highest. The first point is the empty
/// prediction (threshold above every score, precision 1, recall 0); the
/// last is the full assignment.
PRCurve max_assignment_curve(const ScoreMatrix& m, const Assignment& a, const GoldPairs& gold);

// `row_label<TAB>col_label<TAB>score` per pair.
void write_assignment(std::ostream& out, const ScoreMatrix& m, const Assignment& a);
void save_assignment(const ScoreMatrix& m, const Assignment& a, const std::filesystem::path& path);

}  // namespace cognates
