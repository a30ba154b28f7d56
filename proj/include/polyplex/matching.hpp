#pragma once

// Polyplexes (fractional matchings), polydiagonals and diagonals.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyplex/cover_table.hpp"
#include "polyplex/error.hpp"
#include "polyplex/exact_lp.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

/// Sparse nonnegative tensor; absent cells are zero.
struct Polyplex {
  std::size_t d = 0;
  std::size_t n = 0;
  std::map<Index, Rational> entries;

  Rational weight() const {
    Rational w(0);
    for (const auto& [idx, v] : entries) w += v;
    return w;
  }

  Rational hyperplane_sum(std::size_t direction, int position) const {
    Rational s(0);
    for (const auto& [idx, v] : entries)
      if (idx[direction] == position) s += v;
    return s;
  }

  /// Positive entries inside supp(a) and every hyperplane sum at most 1.
  bool is_polyplex_in(const BinaryTensor& a) const {
    if (d != a.dim() || n != a.order()) return false;
    std::vector<std::vector<Rational>> sums(d, std::vector<Rational>(n, Rational(0)));
    for (const auto& [idx, v] : entries) {
      if (!a.in_range(idx) || v < 0 || (v > 0 && !a(idx))) return false;
      for (std::size_t i = 0; i < d; ++i) sums[i][static_cast<std::size_t>(idx[i])] += v;
    }
    for (const auto& row : sums)
      for (const auto& s : row)
        if (s > 1) return false;
    return true;
  }

  friend bool operator==(const Polyplex& x, const Polyplex& y) {
    return x.d == y.d && x.n == y.n && x.entries == y.entries;
  }
};

/// n cells of a tensor meeting every hyperplane exactly once.
struct Diagonal {
  std::vector<Index> cells;
};

struct PolyplexResult {
  Rational weight;
  Polyplex polyplex;
};

namespace detail {

/// The polyplex LP over supp(a): one variable per 1-cell, one <= row per
/// hyperplane (row i*n + j for Γ_{i,j}).
inline lp::Problem polyplex_problem(const BinaryTensor& a, const std::vector<Index>& support) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  lp::Problem p(std::vector<Rational>(support.size(), Rational(1)));
  p.rows.assign(d * n, std::vector<Rational>(support.size(), Rational(0)));
  p.senses.assign(d * n, lp::RowSense::kLessEqual);
  p.rhs.assign(d * n, Rational(1));
  for (std::size_t v = 0; v < support.size(); ++v)
    for (std::size_t i = 0; i < d; ++i) p.rows[i * n + static_cast<std::size_t>(support[v][i])][v] = 1;
  return p;
}

struct PolyplexLp {
  std::vector<Index> support;
  lp::Solution solution;
};

inline PolyplexLp solve_polyplex_lp(const BinaryTensor& a) {
  PolyplexLp out;
  out.support = a.support();
  out.solution = lp::solve(polyplex_problem(a, out.support), lp::Goal::kMaximize);
  if (out.solution.status != lp::Status::kOptimal)
    throw std::logic_error("polyplex LP is always feasible and bounded");
  return out;
}

inline Polyplex polyplex_from(const BinaryTensor& a, const PolyplexLp& lp) {
  Polyplex k{a.dim(), a.order(), {}};
  for (std::size_t v = 0; v < lp.support.size(); ++v)
    if (lp.solution.values[v] != 0) k.entries.emplace(lp.support[v], lp.solution.values[v]);
  return k;
}

inline CoverTable cover_from(const BinaryTensor& a, const PolyplexLp& lp) {
  CoverTable c(a.dim(), a.order());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) c.set(i, j, lp.solution.duals[i * a.order() + j]);
  return c;
}

}  // namespace detail

/// Optimal basic polyplex in `a` and its exact weight.
inline PolyplexResult max_polyplex(const BinaryTensor& a) {
  const detail::PolyplexLp lp = detail::solve_polyplex_lp(a);
  return {lp.solution.objective_value, detail::polyplex_from(a, lp)};
}

/// Exhaustive backtracking. Each step fills the unassigned direction-1
/// hyperplane with the fewest cells still compatible with the partial
/// permutations of directions 2..d.
inline std::optional<Diagonal> find_diagonal(const BinaryTensor& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  if (n > 64) throw PreconditionError("find_diagonal supports order at most 64");
  if (d == 0) return Diagonal{};
  std::vector<std::vector<Index>> by_first(n);
  for (const Index& idx : a.support()) by_first[static_cast<std::size_t>(idx[0])].push_back(idx);
  for (const auto& group : by_first)
    if (group.empty()) return std::nullopt;

  std::vector<std::uint64_t> used(d, 0);
  std::vector<bool> assigned(n, false);
  std::vector<Index> chosen(n);

  auto compatible = [&](const Index& idx) {
    for (std::size_t k = 1; k < d; ++k)
      if (used[k] >> idx[k] & 1U) return false;
    return true;
  };
  auto mark = [&](const Index& idx, bool on) {
    for (std::size_t k = 1; k < d; ++k) {
      if (on)
        used[k] |= std::uint64_t{1} << idx[k];
      else
        used[k] &= ~(std::uint64_t{1} << idx[k]);
    }
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t best = n;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t j = 0; j < n; ++j) {
      if (assigned[j]) continue;
      std::size_t count = 0;
      for (const Index& idx : by_first[j])
        if (compatible(idx)) ++count;
      if (count == 0) return false;
      if (count < best_count) {
        best = j;
        best_count = count;
      }
    }
    assigned[best] = true;
    for (const Index& idx : by_first[best]) {
      if (!compatible(idx)) continue;
      mark(idx, true);
      chosen[best] = idx;
      if (self(self, depth + 1)) return true;
      mark(idx, false);
    }
    assigned[best] = false;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Diagonal{std::move(chosen)};
}

/// True iff the maximum polyplex weight equals n. A diagonal settles it
/// without solving the LP.
inline bool has_polydiagonal(const BinaryTensor& a) {
  if (find_diagonal(a)) return true;
  return max_polyplex(a).weight == static_cast<long>(a.order());
}

struct SlacknessReport {
  /// Cells with k_α > 0 whose cover weight differs from 1.
  std::vector<Index> cell_violations;
  /// Hyperplanes with λ_{i,j} > 0 whose polyplex sum differs from 1.
  std::vector<Hyperplane> hyperplane_violations;
  Rational polyplex_weight;
  Rational cover_weight;

  /// Both slackness families hold, which certifies that K and Λ are optimal.
  bool empty() const { return cell_violations.empty() && hyperplane_violations.empty(); }
};

inline SlacknessReport verify_slackness(const BinaryTensor& a, const Polyplex& k,
                                        const CoverTable& cover) {
  require_same_shape(cover, a);
  if (!k.is_polyplex_in(a)) throw PreconditionError("K is not a polyplex contained in A");
  if (!is_cover_of(cover, a)) throw PreconditionError("Λ is not a hyperplane cover of A");
  SlacknessReport report;
  report.polyplex_weight = k.weight();
  report.cover_weight = cover.weight();
  for (const auto& [idx, v] : k.entries)
    if (v > 0 && cover_weight_at(cover, idx) != 1) report.cell_violations.push_back(idx);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (cover(i, j) > 0 && k.hyperplane_sum(i, static_cast<int>(j)) != 1)
        report.hyperplane_violations.push_back({i, static_cast<int>(j)});
  return report;
}

}  // namespace polyplex
