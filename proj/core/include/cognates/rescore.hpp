#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cognates/matrix.hpp"

namespace cognates {

/// Global-constraint rescoring for one-to-one relations.
///
/// A pair that many competitors beat within its column (reverse rank) or
/// its row (forward rank) is unlikely to belong to a one-to-one relation,
/// so its score is divided by that rank. Ranks follow the set definition
/// literally: the rank of an entry is the number of entries in the line
/// scoring >= it, so every member of a tie group gets the worst rank of
/// the group and the entry itself always counts.
enum class RescoreMethod { baseline, rr, fr, rr_fr_1step, rr_fr_2step };

std::string_view to_string(RescoreMethod method);
RescoreMethod parse_rescore_method(std::string_view name);

/// |{k : s(k,j) >= s(i,j)}|, by direct count over column j.
std::uint32_t reverse_rank(const ScoreMatrix& m, std::size_t i, std::size_t j);
/// |{k : s(i,k) >= s(i,j)}|, by direct count over row i.
std::uint32_t forward_rank(const ScoreMatrix& m, std::size_t i, std::size_t j);

/// Reverse ranks of every cell, row-major. O(n1 n2 log n1).
std::vector<std::uint32_t> reverse_ranks(const ScoreMatrix& m);
/// Forward ranks of every cell, row-major. O(n1 n2 log n2).
std::vector<std::uint32_t> forward_ranks(const ScoreMatrix& m);

// All rescorers require non-negative scores (normalize first) and compute
// ranks on their input; none of them is idempotent.
ScoreMatrix rescore_rr(const ScoreMatrix& m);
ScoreMatrix rescore_fr(const ScoreMatrix& m);
/// s / (reverse_rank * forward_rank), both ranks taken on `m`.
ScoreMatrix rescore_rr_fr_1step(const ScoreMatrix& m);
/// rescore_fr(rescore_rr(m)): forward ranks come from the RR-rescored matrix.
ScoreMatrix rescore_rr_fr_2step(const ScoreMatrix& m);

ScoreMatrix apply(RescoreMethod method, const ScoreMatrix& m);

}  // namespace cognates
