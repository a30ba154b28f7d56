#pragma once

// Constructions of extremal matrices from smaller ones, two-value covers from
// Young diagrams, and the Gale–Ryser test.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyplex/cover_table.hpp"
#include "polyplex/error.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

/// Adds a direction whose hyperplanes all equal `a` (it becomes the last
/// coordinate).
inline BinaryTensor lift_dimension(const BinaryTensor& a) {
  const std::size_t n = a.order();
  BinaryTensor out(a.dim() + 1, n);
  for (std::size_t off = 0; off < out.cell_count(); ++off) out.set(off, a.at(off / n));
  return out;
}

/// Append λ_{i,α_i} to every row i; α must be covered with weight exactly 1.
struct DuplicateIndex {
  Index alpha;
};
/// Append 1 to one row and 0 to the others.
struct AttachOne {
  std::size_t row;
};
/// Append 1-δ to `big_row`, δ to `delta_row` (which must already hold a
/// δ-entry), and 0 elsewhere.
struct AttachSplit {
  std::size_t big_row;
  std::size_t delta_row;
};
using GrowVariant = std::variant<DuplicateIndex, AttachOne, AttachSplit>;

/// Cover of order n+1 for an optimal cover of order n. The deficiency used by
/// AttachSplit is n - weight(Λ).
inline CoverTable grow_order(const CoverTable& cover, const GrowVariant& variant) {
  const std::size_t d = cover.dim();
  const std::size_t n = cover.order();
  std::vector<Rational> column(d, Rational(0));
  if (const auto* dup = std::get_if<DuplicateIndex>(&variant)) {
    const Rational w = cover_weight_at(cover, dup->alpha);
    if (w != 1)
      throw PreconditionError("index " + dup->alpha.to_string() + " is covered with weight " +
                              to_string(w) + ", not 1");
    for (std::size_t i = 0; i < d; ++i) column[i] = cover(i, static_cast<std::size_t>(dup->alpha[i]));
  } else if (const auto* one = std::get_if<AttachOne>(&variant)) {
    if (one->row >= d) throw PreconditionError("row " + std::to_string(one->row + 1) + " out of range");
    column[one->row] = 1;
  } else {
    const auto& split = std::get<AttachSplit>(variant);
    if (split.big_row >= d || split.delta_row >= d)
      throw PreconditionError("split rows out of range");
    if (split.big_row == split.delta_row)
      throw PreconditionError("split rows must differ");
    const Rational delta = Rational(static_cast<long>(n)) - cover.weight();
    if (delta <= 0 || delta > 1)
      throw PreconditionError("cover weight " + to_string(cover.weight()) +
                              " does not give a deficiency in (0, 1]");
    const auto& r = cover.row(split.delta_row);
    if (std::find(r.begin(), r.end(), delta) == r.end())
      throw PreconditionError("row " + std::to_string(split.delta_row + 1) +
                              " has no entry equal to δ = " + to_string(delta));
    column[split.big_row] = Rational(1) - delta;
    column[split.delta_row] = delta;
  }
  std::vector<std::vector<Rational>> rows = cover.rows();
  for (std::size_t i = 0; i < d; ++i) rows[i].push_back(column[i]);
  return CoverTable(std::move(rows));
}

/// Removes the last column that is 1 in exactly one row and 0 elsewhere.
inline std::optional<CoverTable> shrink_order(const CoverTable& cover) {
  const std::size_t d = cover.dim();
  const std::size_t n = cover.order();
  if (n < 2) return std::nullopt;
  for (std::size_t j = n; j-- > 0;) {
    std::size_t ones = 0;
    bool others_zero = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (cover(i, j) == 1)
        ++ones;
      else if (cover(i, j) != 0)
        others_zero = false;
    }
    if (ones != 1 || !others_zero) continue;
    std::vector<std::vector<Rational>> rows = cover.rows();
    for (auto& r : rows) r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
    return CoverTable(std::move(rows));
  }
  return std::nullopt;
}

/// Weakly decreasing positive parts.
struct YoungDiagram {
  std::vector<std::size_t> parts;

  std::size_t cells() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

  void validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] == 0) throw PreconditionError("Young diagram parts must be positive");
      if (i && parts[i] > parts[i - 1])
        throw PreconditionError("Young diagram parts must be nonincreasing");
    }
  }

  /// s*_i = #{j : s_j >= i}.
  YoungDiagram conjugate() const {
    YoungDiagram c;
    if (parts.empty()) return c;
    for (std::size_t i = 1; i <= parts.front(); ++i)
      c.parts.push_back(static_cast<std::size_t>(
          std::count_if(parts.begin(), parts.end(), [i](std::size_t p) { return p >= i; })));
    return c;
  }
};

/// All partitions of `total` into at most `max_parts` parts, each at most
/// `max_part`, in reverse lexicographic order.
inline std::vector<YoungDiagram> partitions(std::size_t total, std::size_t max_parts,
                                            std::size_t max_part) {
  std::vector<YoungDiagram> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t cap) -> void {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    if (cur.size() == max_parts) return;
    for (std::size_t p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total, max_part);
  return out;
}

/// Row i receives parts[i] entries 1/m, left-justified. Requires at most d
/// parts, each at most n-1, m*n - 1 cells in total, and 1 <= m < d.
inline CoverTable two_value_cover(const YoungDiagram& diagram, std::size_t m, std::size_t d,
                                  std::size_t n) {
  diagram.validate();
  if (m == 0 || m >= d) throw PreconditionError("two-value covers need 1 <= m < d");
  if (diagram.parts.size() > d)
    throw PreconditionError("diagram has more than d = " + std::to_string(d) + " rows");
  for (std::size_t p : diagram.parts)
    if (p > n - 1) throw PreconditionError("diagram rows must have at most n-1 cells");
  if (diagram.cells() != m * n - 1)
    throw PreconditionError("diagram has " + std::to_string(diagram.cells()) +
                            " cells; m*n - 1 = " + std::to_string(m * n - 1) + " required");
  CoverTable cover(d, n);
  const Rational entry(1, static_cast<long>(m));
  for (std::size_t i = 0; i < diagram.parts.size(); ++i)
    for (std::size_t j = 0; j < diagram.parts[i]; ++j) cover.set(i, j, entry);
  return cover;
}

/// For a {0, 1/m} cover with row counts t and weight W = Σt/m <= n, A(Λ)
/// has a polyplex of weight W iff max t_i <= W.
inline bool polyplex_weight_feasible_two_value(const std::vector<std::size_t>& t, std::size_t m,
                                               std::size_t n) {
  if (m == 0) throw PreconditionError("m must be positive");
  const std::size_t total = std::accumulate(t.begin(), t.end(), std::size_t{0});
  const Rational w(static_cast<long>(total), static_cast<long>(m));
  if (w > static_cast<long>(n))
    throw PreconditionError("cover weight " + to_string(w) + " exceeds n = " + std::to_string(n));
  const std::size_t max_t = t.empty() ? 0 : *std::max_element(t.begin(), t.end());
  return Rational(static_cast<long>(max_t)) <= w;
}

/// A 0/1 matrix with row sums r and column sums s exists iff s* majorizes r.
inline bool gale_ryser_exists(const std::vector<std::size_t>& r, const std::vector<std::size_t>& s) {
  auto nonincreasing = [](const std::vector<std::size_t>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
  };
  if (!nonincreasing(r) || !nonincreasing(s))
    throw PreconditionError("degree sequences must be nonincreasing");
  const std::size_t sum_r = std::accumulate(r.begin(), r.end(), std::size_t{0});
  const std::size_t sum_s = std::accumulate(s.begin(), s.end(), std::size_t{0});
  if (sum_r != sum_s)
    throw PreconditionError("degree sums differ: " + std::to_string(sum_r) + " vs " +
                            std::to_string(sum_s));
  YoungDiagram sd;
  for (std::size_t v : s)
    if (v) sd.parts.push_back(v);
  const std::vector<std::size_t> star = sd.conjugate().parts;
  std::size_t pr = 0;
  std::size_t ps = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    pr += r[k];
    if (k < star.size()) ps += star[k];
    if (ps < pr) return false;
  }
  return true;
}

/// Order-2 construction: the essential weight λ of `row` becomes λ - δ and a
/// new last row carries δ in the same column. Rejects covers where some index
/// has weight strictly between 1 and 1 + δ.
inline CoverTable split_essential_weight(const CoverTable& cover, const Rational& delta,
                                         std::optional<std::size_t> row = std::nullopt) {
  const std::size_t d = cover.dim();
  if (cover.order() != 2) throw PreconditionError("essential weights are defined for order 2");
  if (delta <= 0 || delta > 1) throw PreconditionError("δ must lie in (0, 1]");
  for (std::size_t i = 0; i < d; ++i)
    if (cover(i, 0) != 0 && cover(i, 1) != 0)
      throw PreconditionError("row " + std::to_string(i + 1) +
                              " has two nonzero entries; no essential weight is defined");
  const std::size_t r = row.value_or(d - 1);
  if (r >= d) throw PreconditionError("row " + std::to_string(r + 1) + " out of range");
  Index alpha(d);
  do {
    const Rational w = cover_weight_at(cover, alpha);
    if (w > 1 && w < Rational(1) + delta)
      throw PreconditionError("index " + alpha.to_string() + " is covered with weight " +
                              to_string(w) + ", strictly between 1 and 1 + δ");
  } while (next_index(alpha, 2));
  const std::size_t col = cover(r, 0) != 0 ? 0 : 1;
  const Rational reduced = cover(r, col) - delta;
  if (reduced < 0)
    throw PreconditionError("essential weight " + to_string(cover(r, col)) + " of row " +
                            std::to_string(r + 1) + " is smaller than δ");
  std::vector<std::vector<Rational>> rows = cover.rows();
  rows[r][col] = reduced;
  std::vector<Rational> extra(2, Rational(0));
  extra[col] = delta;
  rows.push_back(std::move(extra));
  return CoverTable(std::move(rows));
}

}  // namespace polyplex
