#pragma once

// Extremality, diagonal extremality and the minor-polydiagonal theorem.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyplex/cover_table.hpp"
#include "polyplex/covers.hpp"
#include "polyplex/error.hpp"
#include "polyplex/matching.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

struct ExtremalityVerdict {
  bool is_extremal = false;
  Rational deficiency;
  /// First zero cell (offset order) whose flip leaves no polydiagonal.
  std::optional<Index> failing_zero;
  bool has_polydiagonal = false;
};

namespace detail {

/// Whether `a` with cell α switched on has a polydiagonal. A diagonal of the
/// submatrix A_α completes to one through α, which avoids the LP.
inline bool flip_gives_polydiagonal(const BinaryTensor& a, const Index& alpha) {
  if (a.order() == 1) return true;
  if (find_diagonal(delete_around(a, alpha))) return true;
  BinaryTensor flipped = a;
  flipped.set(alpha, true);
  return max_polyplex(flipped).weight == static_cast<long>(a.order());
}

}  // namespace detail

/// No polydiagonal, and switching on any zero cell creates one. For n = 1 the
/// zero tensor is extremal with δ = 1.
inline ExtremalityVerdict is_extremal(const BinaryTensor& a) {
  ExtremalityVerdict v;
  const Rational n(static_cast<long>(a.order()));
  if (find_diagonal(a)) {
    v.has_polydiagonal = true;
    v.deficiency = 0;
    return v;
  }
  v.deficiency = n - max_polyplex(a).weight;
  if (v.deficiency == 0) {
    v.has_polydiagonal = true;
    return v;
  }
  for (std::size_t off = 0; off < a.cell_count(); ++off) {
    if (a.at(off)) continue;
    const Index alpha = a.index_at(off);
    if (!detail::flip_gives_polydiagonal(a, alpha)) {
      v.failing_zero = alpha;
      return v;
    }
  }
  v.is_extremal = true;
  return v;
}

struct DiagonalExtremality {
  bool diagonally_extremal = true;
  std::optional<Index> failing_zero;
};

/// Every zero α must leave a submatrix A_α with a diagonal. The order-0
/// submatrix of an n = 1 tensor counts as having the empty diagonal.
inline DiagonalExtremality is_diagonally_extremal(const BinaryTensor& a) {
  if (has_polydiagonal(a))
    throw PreconditionError("diagonal extremality is defined for matrices without polydiagonals");
  for (std::size_t off = 0; off < a.cell_count(); ++off) {
    if (a.at(off)) continue;
    if (a.order() == 1) continue;
    const Index alpha = a.index_at(off);
    if (!find_diagonal(delete_around(a, alpha))) return {false, alpha};
  }
  return {true, std::nullopt};
}

struct MinorCheck {
  Index beta;
  Index alpha;
  bool passed;
};

struct MinorPolydiagonalReport {
  std::vector<MinorCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const MinorCheck& c) { return c.passed; });
  }
};

/// For every zero β dominated (row by row, in cover weights) by an index α
/// covered with weight 1 - δ, the submatrix A_β must have a polydiagonal.
inline MinorPolydiagonalReport check_minor_polydiagonal(const BinaryTensor& a,
                                                        const CoverTable& cover,
                                                        const Rational& delta) {
  detail::require_optimal_cover(a, cover, delta);
  if (delta <= 0) throw PreconditionError("A has a polydiagonal, so it is not extremal");
  if (a.order() < 2) return {};
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  const Rational target = Rational(1) - delta;
  std::vector<Index> tops;
  Index alpha(d);
  do {
    if (cover_weight_at(cover, alpha) == target) tops.push_back(alpha);
  } while (next_index(alpha, n));

  MinorPolydiagonalReport report;
  for (std::size_t off = 0; off < a.cell_count(); ++off) {
    if (a.at(off)) continue;
    const Index beta = a.index_at(off);
    for (const Index& top : tops) {
      bool dominated = true;
      for (std::size_t i = 0; i < d && dominated; ++i)
        dominated = cover(i, static_cast<std::size_t>(beta[i])) <=
                    cover(i, static_cast<std::size_t>(top[i]));
      if (!dominated) continue;
      report.checks.push_back({beta, top, has_polydiagonal(delete_around(a, beta))});
      break;
    }
  }
  return report;
}

/// Whether the entries of each row can be permuted so that every column sums
/// to at least 1. Rows are placed one at a time; states are the sorted
/// column-sum vectors reached so far.
inline bool rearrangement_feasible(const CoverTable& table) {
  const std::size_t d = table.dim();
  const std::size_t m = table.order();
  if (m == 0) return true;
  std::set<std::vector<Rational>> states{std::vector<Rational>(m, Rational(0))};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> row = table.row(i);
    std::sort(row.begin(), row.end());
    std::set<std::vector<Rational>> next;
    for (const auto& state : states) {
      std::vector<Rational> perm = row;
      do {
        std::vector<Rational> sums = state;
        for (std::size_t j = 0; j < m; ++j) sums[j] += perm[j];
        std::sort(sums.begin(), sums.end());
        next.insert(std::move(sums));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    states = std::move(next);
  }
  return std::any_of(states.begin(), states.end(),
                     [](const std::vector<Rational>& s) { return s.front() >= 1; });
}

}  // namespace polyplex
