#pragma once

// Hyperplane covers (fractional vertex covers): the cover LP, A(Λ), the
// deficiency, exact uniqueness, and the necessary conditions on optimal covers
// of extremal matrices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyplex/cover_table.hpp"
#include "polyplex/error.hpp"
#include "polyplex/exact_lp.hpp"
#include "polyplex/matching.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

/// A(Λ): cell α is 1 iff α is covered with weight at least 1.
inline BinaryTensor induced_matrix(const CoverTable& cover) {
  const std::size_t d = cover.dim();
  const std::size_t n = cover.order();
  if (d == 0 || n == 0) throw PreconditionError("cover table is empty");
  BinaryTensor a(d, n);
  Index alpha(d);
  std::size_t off = 0;
  do {
    if (cover_weight_at(cover, alpha) >= 1) a.set(off, true);
    ++off;
  } while (next_index(alpha, n));
  return a;
}

struct CoverResult {
  Rational weight;
  CoverTable cover;
};

/// Optimal basic cover, read off the polyplex LP's dual.
inline CoverResult min_cover(const BinaryTensor& a) {
  const detail::PolyplexLp lp = detail::solve_polyplex_lp(a);
  return {lp.solution.objective_value, detail::cover_from(a, lp)};
}

/// n minus the maximum polyplex weight.
inline Rational deficiency(const BinaryTensor& a) {
  return Rational(static_cast<long>(a.order())) - max_polyplex(a).weight;
}

/// Λ_α: row i loses column α_i.
inline CoverTable delete_weights(const CoverTable& cover, const Index& alpha) {
  if (cover.order() < 2) throw PreconditionError("delete_weights needs order at least 2");
  if (alpha.size() != cover.dim()) throw PreconditionError("index dimension does not match cover");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < cover.dim(); ++i) {
    if (alpha[i] < 0 || static_cast<std::size_t>(alpha[i]) >= cover.order())
      throw PreconditionError("index " + alpha.to_string() + " is out of range for the cover");
    std::vector<Rational> r = cover.row(i);
    r.erase(r.begin() + alpha[i]);
    rows.push_back(std::move(r));
  }
  return CoverTable(std::move(rows));
}

namespace detail {

/// The cover LP: variable i*n + j is λ_{i,j}; one >= row per 1-cell.
inline lp::Problem cover_problem(const BinaryTensor& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  lp::Problem p(std::vector<Rational>(d * n, Rational(1)));
  for (const Index& idx : a.support()) {
    std::vector<Rational> row(d * n, Rational(0));
    for (std::size_t i = 0; i < d; ++i) row[i * n + static_cast<std::size_t>(idx[i])] = 1;
    p.add_row(std::move(row), lp::RowSense::kGreaterEqual, Rational(1));
  }
  return p;
}

inline CoverTable table_from(const std::vector<Rational>& values, std::size_t d, std::size_t n) {
  CoverTable c(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) c.set(i, j, values[i * n + j]);
  return c;
}

}  // namespace detail

struct UniquenessResult {
  bool unique = true;
  /// An optimal cover different from min_cover's, when not unique.
  std::optional<CoverTable> witness;
};

/// Decides uniqueness of the optimal cover exactly: every λ_{i,j} must be
/// constant on the optimal face of the cover LP.
inline UniquenessResult cover_is_unique(const BinaryTensor& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  const CoverTable base = min_cover(a).cover;
  const lp::Problem face = lp::optimal_face(detail::cover_problem(a), lp::Goal::kMinimize);
  for (std::size_t var = 0; var < d * n; ++var) {
    const lp::FaceRange range = lp::variable_range(face, var);
    if (range.min == range.max) continue;
    const Rational& current = base(var / n, var % n);
    lp::Problem pinned = face;
    std::vector<Rational> unit(d * n, Rational(0));
    unit[var] = 1;
    pinned.add_row(std::move(unit), lp::RowSense::kEqual,
                   current == range.max ? range.min : range.max);
    const lp::Solution s = lp::solve(pinned, lp::Goal::kMinimize);
    return {false, detail::table_from(s.values, d, n)};
  }
  return {true, std::nullopt};
}

/// Coordinates of the saturated-hyperplane indicator vectors in check_licq.
enum class LicqSpace {
  /// Cells with k_α > 0. Independence here is nondegeneracy of K, which
  /// forces a unique optimal cover.
  kPolyplexSupport,
  /// All of supp(A). Weaker: zero cells of K add coordinates that can make
  /// dependent vectors independent.
  kMatrixSupport,
};

/// Indicator vectors of the hyperplanes that K saturates are linearly
/// independent. With the default space, true certifies a unique optimal cover.
inline bool check_licq(const BinaryTensor& a, const Polyplex& k,
                       LicqSpace space = LicqSpace::kPolyplexSupport) {
  if (!k.is_polyplex_in(a)) throw PreconditionError("K is not a polyplex contained in A");
  if (k.weight() != max_polyplex(a).weight)
    throw PreconditionError("K is not an optimal polyplex of A");
  std::vector<Index> cells;
  if (space == LicqSpace::kMatrixSupport) {
    cells = a.support();
  } else {
    for (const auto& [idx, v] : k.entries)
      if (v > 0) cells.push_back(idx);
  }
  std::vector<std::vector<Rational>> vectors;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (k.hyperplane_sum(i, static_cast<int>(j)) != 1) continue;
      std::vector<Rational> v(cells.size(), Rational(0));
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (static_cast<std::size_t>(cells[c][i]) == j) v[c] = 1;
      vectors.push_back(std::move(v));
    }
  }
  return lp::matrix_rank(vectors) == vectors.size();
}

/// Upper indices of Λ: covered with weight at least 1, while every index
/// dominated entrywise by α's weights with a different total is covered
/// with weight below 1.
inline std::vector<Index> upper_indices(const CoverTable& cover) {
  const std::size_t d = cover.dim();
  const std::size_t n = cover.order();
  // Upper-ness depends only on the vector of weights, so work with the
  // distinct values of each row.
  std::vector<std::vector<Rational>> values(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::set<Rational> s(cover.row(i).begin(), cover.row(i).end());
    values[i].assign(s.begin(), s.end());
  }
  std::vector<std::size_t> sizes(d);
  for (std::size_t i = 0; i < d; ++i) sizes[i] = values[i].size();

  auto weight_of = [&](const std::vector<std::size_t>& v) {
    Rational w(0);
    for (std::size_t i = 0; i < d; ++i) w += values[i][v[i]];
    return w;
  };
  auto advance = [](std::vector<std::size_t>& v, const std::vector<std::size_t>& limit) {
    for (std::size_t k = v.size(); k-- > 0;) {
      if (++v[k] <= limit[k]) return true;
      v[k] = 0;
    }
    return false;
  };

  std::vector<std::vector<std::size_t>> upper_profiles;
  std::vector<std::size_t> prof(d, 0);
  std::vector<std::size_t> max_prof(d);
  for (std::size_t i = 0; i < d; ++i) max_prof[i] = sizes[i] - 1;
  do {
    const Rational w = weight_of(prof);
    if (w < 1) continue;
    bool upper = true;
    std::vector<std::size_t> below(d, 0);
    do {
      const Rational wb = weight_of(below);
      if (wb != w && wb >= 1) {
        upper = false;
        break;
      }
    } while (advance(below, prof));
    if (upper) upper_profiles.push_back(prof);
  } while (advance(prof, max_prof));

  std::vector<Index> out;
  Index alpha(d);
  do {
    std::vector<std::size_t> p(d);
    for (std::size_t i = 0; i < d; ++i)
      p[i] = static_cast<std::size_t>(
          std::lower_bound(values[i].begin(), values[i].end(),
                           cover(i, static_cast<std::size_t>(alpha[i]))) -
          values[i].begin());
    if (std::find(upper_profiles.begin(), upper_profiles.end(), p) != upper_profiles.end())
      out.push_back(alpha);
  } while (next_index(alpha, n));
  return out;
}

/// Sufficient condition for Λ to be the unique optimal cover: every upper
/// index is covered with weight exactly 1.
inline bool check_upper_indices(const CoverTable& cover) {
  for (const Index& alpha : upper_indices(cover))
    if (cover_weight_at(cover, alpha) != 1) return false;
  return true;
}

struct CheckOutcome {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct StructuralReport {
  std::vector<CheckOutcome> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckOutcome& c) { return !c.applicable || c.passed; });
  }
};

namespace detail {

inline void require_optimal_cover(const BinaryTensor& a, const CoverTable& cover,
                                  const Rational& delta) {
  require_same_shape(cover, a);
  if (!is_cover_of(cover, a)) throw PreconditionError("Λ is not a hyperplane cover of A");
  const Rational opt = max_polyplex(a).weight;
  if (cover.weight() != opt)
    throw PreconditionError("Λ has weight " + to_string(cover.weight()) +
                            " but the optimum is " + to_string(opt));
  if (Rational(static_cast<long>(a.order())) - opt != delta)
    throw PreconditionError("δ = " + to_string(delta) + " does not match the deficiency " +
                            to_string(Rational(static_cast<long>(a.order())) - opt));
}

}  // namespace detail

/// Necessary conditions on an optimal cover of an extremal matrix. Any failed
/// applicable check certifies that `a` is not extremal.
inline StructuralReport structural_checks(const BinaryTensor& a, const CoverTable& cover,
                                          const Rational& delta) {
  detail::require_optimal_cover(a, cover, delta);
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  StructuralReport report;

  {
    CheckOutcome c{"zero in every row", true, true, ""};
    for (std::size_t i = 0; i < d && c.passed; ++i)
      if (std::none_of(cover.row(i).begin(), cover.row(i).end(),
                       [](const Rational& v) { return v == 0; })) {
        c.passed = false;
        c.detail = "row " + std::to_string(i + 1) + " has no zero entry";
      }
    report.checks.push_back(c);
  }

  {
    CheckOutcome c{"weight-1 index in every hyperplane", delta < 1, true, ""};
    if (c.applicable) {
      std::vector<std::vector<bool>> hit(d, std::vector<bool>(n, false));
      Index alpha(d);
      do {
        if (cover_weight_at(cover, alpha) == 1)
          for (std::size_t i = 0; i < d; ++i) hit[i][static_cast<std::size_t>(alpha[i])] = true;
      } while (next_index(alpha, n));
      for (std::size_t i = 0; i < d && c.passed; ++i)
        for (std::size_t j = 0; j < n && c.passed; ++j)
          if (!hit[i][j]) {
            c.passed = false;
            c.detail = "hyperplane (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") has no index covered with weight 1";
          }
    } else {
      c.detail = "needs δ < 1";
    }
    report.checks.push_back(c);
  }

  {
    CheckOutcome c{"no weight strictly between 1-δ and 1", true, true, ""};
    const Rational low = Rational(1) - delta;
    Index alpha(d);
    do {
      const Rational w = cover_weight_at(cover, alpha);
      if (w > low && w < 1) {
        c.passed = false;
        c.detail = "index " + alpha.to_string() + " has weight " + to_string(w);
        break;
      }
    } while (next_index(alpha, n));
    report.checks.push_back(c);
  }

  {
    CheckOutcome c{"distinct row entries differ by at least δ", true, true, ""};
    for (std::size_t i = 0; i < d && c.passed; ++i)
      for (std::size_t j = 0; j < n && c.passed; ++j)
        for (std::size_t l = 0; l < n && c.passed; ++l) {
          const Rational diff = cover(i, j) - cover(i, l);
          if (diff > 0 && diff < delta) {
            c.passed = false;
            c.detail = "row " + std::to_string(i + 1) + " entries " + to_string(cover(i, j)) +
                       " and " + to_string(cover(i, l));
          }
        }
    report.checks.push_back(c);
  }

  {
    CheckOutcome c{"fractional entries within [δ, 1-δ]", true, true, ""};
    for (std::size_t i = 0; i < d && c.passed; ++i)
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        const Rational& v = cover(i, j);
        if (v != 0 && v != 1 && (v < delta || v > Rational(1) - delta)) {
          c.passed = false;
          c.detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                     to_string(v);
        }
      }
    report.checks.push_back(c);
  }

  {
    CheckOutcome c{"fewer than n entries above 1/2", true, true, ""};
    std::size_t big = 0;
    for (const auto& row : cover.rows())
      for (const auto& v : row)
        if (v > Rational(1, 2)) ++big;
    if (big >= n) {
      c.passed = false;
      c.detail = std::to_string(big) + " entries exceed 1/2";
    }
    report.checks.push_back(c);
  }
  return report;
}

struct BigDeficiencyReport {
  /// False when δ lies in (1/3, 1/2) or (1/2, 1), where no extremal matrix exists.
  bool deficiency_allowed = true;
  /// For δ in {1, 1/2, 1/3}: every entry lies in the permitted value set.
  bool entries_allowed = true;
  std::string detail;
};

inline BigDeficiencyReport classify_big_deficiency(const Rational& delta, const CoverTable& cover) {
  BigDeficiencyReport r;
  const Rational half(1, 2);
  const Rational third(1, 3);
  if ((delta > half && delta < 1) || (delta > third && delta < half)) {
    r.deficiency_allowed = false;
    r.detail = "no extremal matrix has deficiency " + to_string(delta);
    return r;
  }
  std::vector<Rational> allowed;
  if (delta == 1)
    allowed = {Rational(0), Rational(1)};
  else if (delta == half)
    allowed = {Rational(0), half, Rational(1)};
  else if (delta == third)
    allowed = {Rational(0), third, Rational(2, 3), Rational(1)};
  if (allowed.empty()) return r;
  for (std::size_t i = 0; i < cover.dim(); ++i)
    for (std::size_t j = 0; j < cover.order(); ++j)
      if (std::find(allowed.begin(), allowed.end(), cover(i, j)) == allowed.end()) {
        r.entries_allowed = false;
        r.detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                   to_string(cover(i, j)) + " is not allowed for δ = " + to_string(delta);
        return r;
      }
  return r;
}

}  // namespace polyplex
