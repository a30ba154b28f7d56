#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "polyplex/error.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

/// A d x n table of nonnegative weights λ_{i,j}, one per hyperplane.
class CoverTable {
 public:
  CoverTable() = default;
  CoverTable(std::size_t d, std::size_t n)
      : rows_(d, std::vector<Rational>(n, Rational(0))) {}
  explicit CoverTable(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_) {
      if (r.size() != rows_.front().size())
        throw PreconditionError("cover rows have different lengths");
      for (const auto& v : r)
        if (v < 0) throw PreconditionError("cover entries must be nonnegative");
    }
  }

  std::size_t dim() const { return rows_.size(); }
  std::size_t order() const { return rows_.empty() ? 0 : rows_.front().size(); }

  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  void set(std::size_t i, std::size_t j, Rational v) {
    if (v < 0) throw PreconditionError("cover entries must be nonnegative");
    rows_[i][j] = std::move(v);
  }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<Rational>& row(std::size_t i) const { return rows_[i]; }

  Rational weight() const {
    Rational w(0);
    for (const auto& r : rows_)
      for (const auto& v : r) w += v;
    return w;
  }

  /// Each row sorted in nonincreasing order (the stepped representative).
  CoverTable sorted_rows() const {
    CoverTable out = *this;
    for (auto& r : out.rows_) std::sort(r.begin(), r.end(), std::greater<>());
    return out;
  }

  friend bool operator==(const CoverTable& a, const CoverTable& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const CoverTable& a, const CoverTable& b) { return !(a == b); }

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Σ_i λ_{i,α_i}.
inline Rational cover_weight_at(const CoverTable& cover, const Index& alpha) {
  if (alpha.size() != cover.dim())
    throw PreconditionError("index dimension " + std::to_string(alpha.size()) +
                            " does not match cover dimension " + std::to_string(cover.dim()));
  Rational w(0);
  for (std::size_t i = 0; i < cover.dim(); ++i) {
    if (alpha[i] < 0 || static_cast<std::size_t>(alpha[i]) >= cover.order())
      throw PreconditionError("index " + alpha.to_string() + " is out of range for the cover");
    w += cover(i, static_cast<std::size_t>(alpha[i]));
  }
  return w;
}

/// True iff every 1-cell of `a` is covered with weight at least 1.
inline bool is_cover_of(const CoverTable& cover, const BinaryTensor& a) {
  if (cover.dim() != a.dim() || cover.order() != a.order()) return false;
  for (std::size_t off = 0; off < a.cell_count(); ++off)
    if (a.at(off) && cover_weight_at(cover, a.index_at(off)) < 1) return false;
  return true;
}

inline void require_same_shape(const CoverTable& cover, const BinaryTensor& a) {
  if (cover.dim() != a.dim() || cover.order() != a.order())
    throw PreconditionError("cover shape " + std::to_string(cover.dim()) + "x" +
                            std::to_string(cover.order()) + " does not match tensor d=" +
                            std::to_string(a.dim()) + ", n=" + std::to_string(a.order()));
}

}  // namespace polyplex
