#pragma once

// Exact rational linear programming.
//
// Problems are `optimize c.x  s.t.  row_i . x (<=|>=|=) b_i,  x >= 0`, solved by
// a dense-tableau two-phase primal simplex with Bland's rule. The solver can
// work on the problem itself or on its LP dual (Route::kDual), recovering the
// primal vertex from the dual tableau's reduced costs. Route::kAuto picks
// whichever tableau has fewer rows.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polyplex/error.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/small_rational.hpp"

namespace polyplex::lp {

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };
enum class Goal { kMaximize, kMinimize };
enum class Status { kOptimal, kInfeasible, kUnbounded };
enum class Route { kAuto, kPrimal, kDual };

struct Problem {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<RowSense> senses;
  std::vector<Rational> rhs;

  Problem() = default;
  explicit Problem(std::vector<Rational> c) : objective(std::move(c)) {}

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }

  void add_row(std::vector<Rational> coeffs, RowSense sense, Rational b) {
    rows.push_back(std::move(coeffs));
    senses.push_back(sense);
    rhs.push_back(std::move(b));
  }

  void validate() const {
    if (rows.size() != senses.size() || rows.size() != rhs.size())
      throw PreconditionError("LP row, sense and rhs counts differ");
    for (const auto& row : rows)
      if (row.size() != objective.size())
        throw PreconditionError("LP row width " + std::to_string(row.size()) +
                                " differs from variable count " +
                                std::to_string(objective.size()));
  }
};

/// A basic solution. Column ids in `basis` refer to the standard form
/// `[A | D]`, where column num_vars + i is the slack (<= row), surplus (>= row)
/// or artificial (= row) of row i.
struct Solution {
  Status status = Status::kInfeasible;
  std::vector<Rational> values;
  Rational objective_value;
  std::vector<std::size_t> basis;
  /// Row multipliers y with objective_value == rhs . y; sign conventions are
  /// those of the LP dual of the stated goal.
  std::vector<Rational> duals;
};

struct FaceRange {
  Rational min;
  Rational max;
};

namespace detail {

using polyplex::detail::SmallRational;

/// Dense simplex tableau for `max c.x`, built from a normalized Problem.
template <class Num>
class Tableau {
 public:
  Tableau(const Problem& p, const std::vector<Rational>& max_objective)
      : m_(p.num_rows()), n_(p.num_vars()) {
    // Columns: structural [0,n), one auxiliary per row [n, n+m), then extra
    // artificials for inequality rows whose auxiliary is not a unit column.
    unit_col_.resize(m_);
    row_sign_.resize(m_);
    std::vector<std::size_t> extra_rows;
    for (std::size_t i = 0; i < m_; ++i) {
      row_sign_[i] = p.rhs[i] < 0 ? -1 : 1;
      if (p.senses[i] == RowSense::kEqual) {
        unit_col_[i] = n_ + i;
      } else {
        const int aux_sign = p.senses[i] == RowSense::kLessEqual ? 1 : -1;
        if (aux_sign * row_sign_[i] > 0) {
          unit_col_[i] = n_ + i;
        } else {
          unit_col_[i] = n_ + m_ + extra_rows.size();
          extra_rows.push_back(i);
        }
      }
    }
    cols_ = n_ + m_ + extra_rows.size();
    artificial_.assign(cols_, false);
    for (std::size_t i = 0; i < m_; ++i)
      if (p.senses[i] == RowSense::kEqual) artificial_[n_ + i] = true;
    for (std::size_t k = 0; k < extra_rows.size(); ++k) artificial_[n_ + m_ + k] = true;

    width_ = cols_ + 1;
    cells_.assign((m_ + 1) * width_, Num(0));
    for (std::size_t i = 0; i < m_; ++i) {
      const Num sign(row_sign_[i]);
      (void)sign;
      for (std::size_t j = 0; j < n_; ++j)
        if (p.rows[i][j] != 0) at(i, j) = sign * convert(p.rows[i][j]);
      if (p.senses[i] == RowSense::kEqual)
        at(i, n_ + i) = 1;
      else
        at(i, n_ + i) = sign * (p.senses[i] == RowSense::kLessEqual ? 1 : -1);
      at(i, unit_col_[i]) = 1;
      at(i, cols_) = sign * convert(p.rhs[i]);
    }
    basis_ = unit_col_;
    cost_.assign(cols_, Num(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = convert(max_objective[j]);
  }

  /// Runs both phases. Returns the final status.
  Status run() {
    bool any_artificial = false;
    for (std::size_t i = 0; i < m_; ++i)
      if (artificial_[basis_[i]]) any_artificial = true;
    if (any_artificial) {
      std::vector<Num> phase1(cols_, Num(0));
      for (std::size_t j = 0; j < cols_; ++j)
        if (artificial_[j]) phase1[j] = -1;
      load_objective(phase1);
      // Phase one is bounded above by zero, so it always terminates optimal.
      iterate(/*allow_artificial=*/true);
      if (objective_row_value() < 0) return Status::kInfeasible;
      drive_out_artificials();
    }
    load_objective(cost_);
    return iterate(/*allow_artificial=*/false) ? Status::kOptimal : Status::kUnbounded;
  }

  std::vector<Rational> primal_values() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = to_rational(at(i, cols_));
    return x;
  }

  /// Multipliers of the original (unnormalized) rows for the max problem.
  std::vector<Rational> row_duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      y[i] = to_rational(at(m_, unit_col_[i]));
      if (row_sign_[i] < 0) y[i] = -y[i];
    }
    return y;
  }

  /// Basic columns in standard-form ids (extra artificials never remain basic).
  std::vector<std::size_t> standard_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ + m_)
        throw std::logic_error("simplex left an inequality artificial in the basis");
      out.push_back(basis_[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static Num convert(const Rational& r) {
    if constexpr (std::is_same_v<Num, Rational>)
      return r;
    else
      return Num::from(r);
  }
  static Rational to_rational(const Num& v) {
    if constexpr (std::is_same_v<Num, Rational>)
      return v;
    else
      return v.to_rational();
  }

  Num& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Num& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

  const Num& objective_row_value() const { return at(m_, cols_); }

  // Reduced costs d_j = c_B B^-1 A_j - c_j, stored in row m_.
  void load_objective(const std::vector<Num>& c) {
    for (std::size_t j = 0; j <= cols_; ++j) at(m_, j) = j < cols_ ? Num(-c[j]) : Num(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const Num& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (at(i, j) != 0) at(m_, j) += cb * at(i, j);
    }
  }

  // Bland's rule. Returns false when the objective is unbounded.
  bool iterate(bool allow_artificial) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && artificial_[j]) continue;
        if (at(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = m_;
      Num best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Num& a = at(i, enter);
        if (a <= 0) continue;
        Num ratio = at(i, cols_) / a;
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!artificial_[basis_[i]]) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!artificial_[j] && at(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Num inv = Num(1) / at(r, c);
    nonzero_.clear();
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (at(r, j) != 0) {
        at(r, j) *= inv;
        nonzero_.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Num f = at(i, c);
      for (std::size_t j : nonzero_) at(i, j) -= f * at(r, j);
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t cols_ = 0;
  std::size_t width_ = 0;
  std::vector<Num> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> unit_col_;
  std::vector<int> row_sign_;
  std::vector<bool> artificial_;
  std::vector<Num> cost_;
  std::vector<std::size_t> nonzero_;
};

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline std::vector<Rational> max_form(const Problem& p, Goal goal) {
  std::vector<Rational> c = p.objective;
  if (goal == Goal::kMinimize)
    for (auto& v : c) v = -v;
  return c;
}

template <class Num>
void read_solution(Tableau<Num>& t, const Problem& p, Goal goal, Solution& s) {
  s.status = t.run();
  if (s.status != Status::kOptimal) return;
  s.values = t.primal_values();
  s.objective_value = dot(p.objective, s.values);
  s.basis = t.standard_basis();
  s.duals = t.row_duals();
  if (goal == Goal::kMinimize)
    for (auto& y : s.duals) y = -y;
}

inline Solution solve_primal(const Problem& p, Goal goal) {
  Solution s;
  try {
    Tableau<SmallRational> t(p, max_form(p, goal));
    read_solution(t, p, goal, s);
  } catch (const SmallRational::Overflow&) {
    s = Solution{};
    Tableau<Rational> t(p, max_form(p, goal));
    read_solution(t, p, goal, s);
  }
  return s;
}

/// Column bookkeeping for the nonnegative-variable dual built by dual_problem.
struct DualLayout {
  // For primal row i: first dual variable, and whether it has a second
  // (negated) copy because the row is an equality.
  std::vector<std::size_t> first_var;
  std::vector<bool> split;
  std::size_t num_dual_vars = 0;
};

inline std::pair<Problem, DualLayout> build_dual(const Problem& p, Goal goal) {
  const std::vector<Rational> c = max_form(p, goal);
  DualLayout layout;
  layout.first_var.resize(p.num_rows());
  layout.split.resize(p.num_rows());
  std::vector<std::pair<std::size_t, int>> var_source;  // (row, sign)
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    layout.first_var[i] = var_source.size();
    switch (p.senses[i]) {
      case RowSense::kLessEqual:
        var_source.emplace_back(i, 1);
        break;
      case RowSense::kGreaterEqual:
        var_source.emplace_back(i, -1);
        break;
      case RowSense::kEqual:
        layout.split[i] = true;
        var_source.emplace_back(i, 1);
        var_source.emplace_back(i, -1);
        break;
    }
  }
  layout.num_dual_vars = var_source.size();
  Problem d;
  d.objective.resize(var_source.size());
  for (std::size_t k = 0; k < var_source.size(); ++k) {
    const auto [row, sign] = var_source[k];
    d.objective[k] = sign > 0 ? p.rhs[row] : Rational(-p.rhs[row]);
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    std::vector<Rational> coeffs(var_source.size());
    for (std::size_t k = 0; k < var_source.size(); ++k) {
      const auto [row, sign] = var_source[k];
      const Rational& a = p.rows[row][j];
      if (a != 0) coeffs[k] = sign > 0 ? a : Rational(-a);
    }
    d.add_row(std::move(coeffs), RowSense::kGreaterEqual, c[j]);
  }
  return {std::move(d), std::move(layout)};
}

inline Solution solve_dual_route(const Problem& p, Goal goal) {
  auto [d, layout] = build_dual(p, goal);
  Solution ds = solve_primal(d, Goal::kMinimize);
  if (ds.status == Status::kUnbounded) return Solution{Status::kInfeasible, {}, {}, {}, {}};
  // Dual infeasible leaves the primal either infeasible or unbounded.
  if (ds.status == Status::kInfeasible) return solve_primal(p, goal);

  const std::size_t n = p.num_vars();
  const std::size_t m = p.num_rows();
  Solution s;
  s.status = Status::kOptimal;
  s.values = ds.duals;  // dual of the dual
  s.objective_value = dot(p.objective, s.values);

  std::vector<bool> dual_basic(layout.num_dual_vars + n, false);
  for (std::size_t col : ds.basis) dual_basic[col] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!dual_basic[layout.num_dual_vars + j]) s.basis.push_back(j);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = layout.first_var[i];
    const bool basic = dual_basic[k] || (layout.split[i] && dual_basic[k + 1]);
    if (!basic) s.basis.push_back(n + i);
  }
  std::sort(s.basis.begin(), s.basis.end());
  if (s.basis.size() != m) throw std::logic_error("complementary basis has wrong size");

  s.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = layout.first_var[i];
    Rational y;
    switch (p.senses[i]) {
      case RowSense::kLessEqual: y = ds.values[k]; break;
      case RowSense::kGreaterEqual: y = -ds.values[k]; break;
      case RowSense::kEqual: y = ds.values[k] - ds.values[k + 1]; break;
    }
    s.duals[i] = goal == Goal::kMinimize ? Rational(-y) : y;
  }
  return s;
}

}  // namespace detail

/// Exact rank by Gaussian elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k)
        if (m[rank][k] != 0) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// The LP dual of `p` written with nonnegative variables (equality rows get a
/// +/- pair). It is always a minimization with >= rows.
inline Problem dual_problem(const Problem& p, Goal goal) {
  p.validate();
  return detail::build_dual(p, goal).first;
}

/// Exact optimal basic solution, or an infeasible/unbounded status.
/// Deterministic for a given input and route.
inline Solution solve(const Problem& p, Goal goal, Route route = Route::kAuto) {
  p.validate();
  if (route == Route::kAuto)
    route = p.num_rows() > p.num_vars() ? Route::kDual : Route::kPrimal;
  return route == Route::kDual ? detail::solve_dual_route(p, goal)
                               : detail::solve_primal(p, goal);
}

/// `p` with the extra row objective == optimum and a zero objective. Throws
/// unless `p` is feasible and bounded.
inline Problem optimal_face(const Problem& p, Goal goal, Route route = Route::kAuto) {
  const Solution opt = solve(p, goal, route);
  if (opt.status != Status::kOptimal)
    throw PreconditionError("optimal face needs a feasible bounded LP");
  Problem face = p;
  face.add_row(p.objective, RowSense::kEqual, opt.objective_value);
  face.objective.assign(p.num_vars(), Rational(0));
  return face;
}

/// Exact min and max of one variable over a feasible polyhedron.
inline FaceRange variable_range(Problem face, std::size_t var, Route route = Route::kAuto) {
  if (var >= face.num_vars()) throw PreconditionError("probe variable out of range");
  face.objective.assign(face.num_vars(), Rational(0));
  face.objective[var] = 1;
  const Solution lo = solve(face, Goal::kMinimize, route);
  const Solution hi = solve(face, Goal::kMaximize, route);
  if (lo.status != Status::kOptimal || hi.status != Status::kOptimal)
    throw DomainError("optimal face is unbounded in the probed variable");
  return {lo.objective_value, hi.objective_value};
}

/// Exact range of variable `var` over the optimal face of `p`.
inline FaceRange probe_optimal_face(const Problem& p, Goal goal, std::size_t var,
                                    Route route = Route::kAuto) {
  if (var >= p.num_vars()) throw PreconditionError("probe variable out of range");
  return variable_range(optimal_face(p, goal, route), var, route);
}

}  // namespace polyplex::lp
