#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cognates/matrix.hpp"

namespace cognates {

struct CurvePoint {
  double threshold = 0.0;
  double precision = 0.0;
  double recall = 0.0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Precision-recall curve in sweep order (recall non-decreasing) together
/// with its summary statistics.
struct PRCurve {
  std::vector<CurvePoint> points;
  double max_f1 = 0.0;
  double iap11 = 0.0;
};

/// One candidate in ranked order: its score and whether it is a gold pair.
struct RankedItem {
  double score = 0.0;
  bool gold = false;
};

/// Walks a ranked list emitting one point per position, with precision =
/// hits/predicted and recall = hits/gold_total. Positions after the last
/// gold hit are omitted: they only lower precision at the final recall and
/// cannot change any summary. Fills in max_f1 and iap11.
PRCurve curve_from_ranking(std::span<const RankedItem> ranked, std::size_t gold_total);

/// Sorts every cell of `m` by descending score (ties: row label, then
/// column label) and sweeps the threshold down the list. Throws if no gold
/// pair is in the candidate universe.
PRCurve pr_curve(const ScoreMatrix& m, const GoldPairs& gold);

/// max precision over points with recall >= r, or 0 if there are none.
double interpolated_precision(const PRCurve& curve, double r);
/// Mean interpolated precision at recall 0.0, 0.1, ..., 1.0.
double iap11(const PRCurve& curve);
/// Highest harmonic mean of precision and recall along the curve.
double max_f1(const PRCurve& curve);

/// Recomputes curve.max_f1 and curve.iap11 from its points.
void summarize(PRCurve& curve);

struct ReportRow {
  std::string method;
  double max_f1 = 0.0;
  double iap11 = 0.0;
};

struct Report {
  std::vector<ReportRow> rows;
  std::vector<PRCurve> curves;  // parallel to rows
};

/// Evaluates each named matrix against `gold`. Matrices must share labels.
Report compare_methods(const std::vector<std::pair<std::string, ScoreMatrix>>& matrices,
                       const GoldPairs& gold);

// Report: `#method<TAB>maxf1<TAB>iap11` header, then one row per method
// with values to 4 decimal places.
void write_report(std::ostream& out, const Report& report);
// Curve: `#prcurve v1 method=<name>` header, then
// `threshold<TAB>precision<TAB>recall` lines.
void write_curve(std::ostream& out, const PRCurve& curve, const std::string& method);

}  // namespace cognates
