#pragma once

// Dense d-dimensional (0,1)-matrices of order n.
//
// Cells are stored with the last coordinate varying fastest. Coordinates are
// 0-based in the API; the text formats in io.hpp are 1-based.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "polyplex/error.hpp"

namespace polyplex {

inline constexpr std::size_t kMaxDim = 16;

/// Ceiling on n^d for dense storage.
inline constexpr std::size_t kMaxCells = std::size_t{1} << 26;

/// A cell address: d coordinates, each in [0, n).
class Index {
 public:
  Index() = default;
  explicit Index(std::size_t d) : size_(static_cast<std::uint8_t>(d)) {
    if (d > kMaxDim) throw PreconditionError("dimension exceeds " + std::to_string(kMaxDim));
  }
  Index(std::initializer_list<int> coords) : Index(coords.size()) {
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  std::size_t size() const { return size_; }
  int& operator[](std::size_t i) { return c_[i]; }
  int operator[](std::size_t i) const { return c_[i]; }
  const int* begin() const { return c_.data(); }
  const int* end() const { return c_.data() + size_; }
  int* begin() { return c_.data(); }
  int* end() { return c_.data() + size_; }

  friend bool operator==(const Index& a, const Index& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend bool operator<(const Index& a, const Index& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  /// 1-based rendering, e.g. "(1,2,2)".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i] + 1);
    }
    return s + ")";
  }

 private:
  std::array<int, kMaxDim> c_{};
  std::uint8_t size_ = 0;
};

/// The slice Γ_{direction, position}.
struct Hyperplane {
  std::size_t direction;
  int position;
};

inline std::size_t checked_cell_count(std::size_t d, std::size_t n) {
  if (d > kMaxDim) throw PreconditionError("dimension exceeds " + std::to_string(kMaxDim));
  if (n == 0) throw PreconditionError("order must be at least 1");
  std::size_t cells = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (cells > kMaxCells / n) throw GuardError("tensor exceeds the dense cell limit");
    cells *= n;
  }
  return cells;
}

class BinaryTensor {
 public:
  BinaryTensor() = default;
  BinaryTensor(std::size_t d, std::size_t n)
      : d_(d), n_(n), bits_(checked_cell_count(d, n), 0) {}
  BinaryTensor(std::size_t d, std::size_t n, std::vector<std::uint8_t> bits)
      : d_(d), n_(n), bits_(std::move(bits)) {
    if (bits_.size() != checked_cell_count(d, n))
      throw PreconditionError("expected " + std::to_string(checked_cell_count(d, n)) +
                              " cells, got " + std::to_string(bits_.size()));
    for (auto& b : bits_)
      if (b > 1) throw PreconditionError("tensor cells must be 0 or 1");
  }

  static BinaryTensor filled(std::size_t d, std::size_t n, bool value) {
    BinaryTensor t(d, n);
    std::fill(t.bits_.begin(), t.bits_.end(), value ? 1 : 0);
    return t;
  }

  std::size_t dim() const { return d_; }
  std::size_t order() const { return n_; }
  std::size_t cell_count() const { return bits_.size(); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::size_t stride(std::size_t direction) const {
    std::size_t s = 1;
    for (std::size_t k = direction + 1; k < d_; ++k) s *= n_;
    return s;
  }

  std::size_t offset(const Index& a) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < d_; ++k) off = off * n_ + static_cast<std::size_t>(a[k]);
    return off;
  }

  Index index_at(std::size_t off) const {
    Index a(d_);
    for (std::size_t k = d_; k-- > 0;) {
      a[k] = static_cast<int>(off % n_);
      off /= n_;
    }
    return a;
  }

  bool in_range(const Index& a) const {
    if (a.size() != d_) return false;
    for (int c : a)
      if (c < 0 || static_cast<std::size_t>(c) >= n_) return false;
    return true;
  }

  void require_index(const Index& a) const {
    if (!in_range(a))
      throw PreconditionError("index " + a.to_string() + " is out of range for a tensor with d=" +
                              std::to_string(d_) + ", n=" + std::to_string(n_));
  }

  bool at(std::size_t off) const { return bits_[off] != 0; }
  bool operator()(const Index& a) const { return bits_[offset(a)] != 0; }
  void set(std::size_t off, bool v) { bits_[off] = v ? 1 : 0; }
  void set(const Index& a, bool v) { bits_[offset(a)] = v ? 1 : 0; }

  std::size_t ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
  }

  std::vector<Index> support() const {
    std::vector<Index> out;
    for (std::size_t off = 0; off < bits_.size(); ++off)
      if (bits_[off]) out.push_back(index_at(off));
    return out;
  }

  std::vector<Index> zeros() const {
    std::vector<Index> out;
    for (std::size_t off = 0; off < bits_.size(); ++off)
      if (!bits_[off]) out.push_back(index_at(off));
    return out;
  }

  /// Entrywise A <= B (same shape required).
  bool contained_in(const BinaryTensor& other) const {
    if (d_ != other.d_ || n_ != other.n_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] > other.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const BinaryTensor& a, const BinaryTensor& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const BinaryTensor& a, const BinaryTensor& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bits_ < b.bits_;
  }

 private:
  std::size_t d_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Advances `a` to the next index in offset order; false after the last one.
inline bool next_index(Index& a, std::size_t n) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (static_cast<std::size_t>(++a[k]) < n) return true;
    a[k] = 0;
  }
  return false;
}

/// Γ_{i,j} as a (d-1)-dimensional tensor. For d = 1 the result is a single
/// cell with d = 0.
inline BinaryTensor slice(const BinaryTensor& a, Hyperplane h) {
  if (h.direction >= a.dim() || h.position < 0 ||
      static_cast<std::size_t>(h.position) >= a.order())
    throw PreconditionError("hyperplane (" + std::to_string(h.direction + 1) + "," +
                            std::to_string(h.position + 1) + ") is out of range");
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  BinaryTensor out(d - 1, n);
  Index src(d);
  src[h.direction] = h.position;
  for (std::size_t off = 0; off < out.cell_count(); ++off) {
    std::size_t rest = off;
    for (std::size_t k = d; k-- > 0;) {
      if (k == h.direction) continue;
      src[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    out.set(off, a(src));
  }
  return out;
}

/// A_α: the order-(n-1) submatrix left after deleting every hyperplane
/// through α.
inline BinaryTensor delete_around(const BinaryTensor& a, const Index& alpha) {
  if (a.order() < 2) throw PreconditionError("delete_around needs order at least 2");
  a.require_index(alpha);
  const std::size_t d = a.dim();
  BinaryTensor out(d, a.order() - 1);
  Index beta(d);
  Index src(d);
  do {
    for (std::size_t k = 0; k < d; ++k) src[k] = beta[k] < alpha[k] ? beta[k] : beta[k] + 1;
    if (a(src)) out.set(beta, true);
  } while (next_index(beta, out.order()));
  return out;
}

/// True iff a_α != a_ᾱ for every α, where ᾱ complements each coordinate.
inline bool is_antipodal(const BinaryTensor& a) {
  if (a.order() != 2) throw PreconditionError("antipodality is defined for order 2 only");
  const std::size_t last = a.cell_count() - 1;
  for (std::size_t off = 0; off <= last / 2; ++off)
    if (a.at(off) == a.at(last - off)) return false;
  return true;
}

/// Stepped with weakly decreasing slices: every 1-cell's lower neighbours
/// (one coordinate decreased by one) are also 1-cells.
inline bool is_stepped(const BinaryTensor& a) {
  for (std::size_t off = 0; off < a.cell_count(); ++off) {
    if (!a.at(off)) continue;
    std::size_t rest = off;
    std::size_t stride = 1;
    for (std::size_t k = a.dim(); k-- > 0;) {
      if (rest % a.order() != 0 && !a.at(off - stride)) return false;
      rest /= a.order();
      stride *= a.order();
    }
  }
  return true;
}

/// An element of S_d x (S_n)^d. Output direction k reads input direction
/// directions[k]; coordinate v of output direction k reads input coordinate
/// positions[k][v].
struct GroupElement {
  std::vector<std::size_t> directions;
  std::vector<std::vector<int>> positions;

  static GroupElement identity(std::size_t d, std::size_t n) {
    GroupElement g;
    g.directions.resize(d);
    std::iota(g.directions.begin(), g.directions.end(), std::size_t{0});
    g.positions.assign(d, std::vector<int>(n));
    for (auto& p : g.positions) std::iota(p.begin(), p.end(), 0);
    return g;
  }
};

inline BinaryTensor apply(const GroupElement& g, const BinaryTensor& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  if (g.directions.size() != d || g.positions.size() != d)
    throw PreconditionError("group element has the wrong dimension");
  BinaryTensor out(d, n);
  Index beta(d);
  Index src(d);
  do {
    for (std::size_t k = 0; k < d; ++k) src[g.directions[k]] = g.positions[k][beta[k]];
    out.set(beta, a(src));
  } while (next_index(beta, n));
  return out;
}

/// Swaps two directions.
inline BinaryTensor transpose(const BinaryTensor& a, std::size_t i, std::size_t j) {
  GroupElement g = GroupElement::identity(a.dim(), a.order());
  std::swap(g.directions[i], g.directions[j]);
  return apply(g, a);
}

/// |S_d x (S_n)^d|, saturating at SIZE_MAX.
inline std::size_t group_order(std::size_t d, std::size_t n) {
  auto factorial = [](std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) {
      if (f > SIZE_MAX / i) return SIZE_MAX;
      f *= i;
    }
    return f;
  };
  std::size_t total = factorial(d);
  const std::size_t fn = factorial(n);
  for (std::size_t i = 0; i < d; ++i) {
    if (fn != 0 && total > SIZE_MAX / fn) return SIZE_MAX;
    total *= fn;
  }
  return total;
}

inline constexpr std::size_t kDefaultCanonicalGuard = 5'000'000;

namespace detail {

inline std::vector<std::vector<int>> all_permutations(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

/// Lexicographically least flattening over the whole equivalence group, by
/// exhaustive enumeration that abandons each image at its first bit above
/// the incumbent.
inline BinaryTensor canonical_form(const BinaryTensor& a,
                                   std::size_t guard = kDefaultCanonicalGuard) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  if (group_order(d, n) > guard)
    throw GuardError("canonical form needs " + std::to_string(group_order(d, n)) +
                     " group elements, above the guard of " + std::to_string(guard));
  const auto perms = detail::all_permutations(n);
  const std::size_t cells = a.cell_count();
  std::vector<std::size_t> strides(d);
  for (std::size_t k = 0; k < d; ++k) strides[k] = a.stride(k);

  std::vector<std::uint8_t> best(a.bits());
  std::vector<std::uint8_t> cur(cells);
  std::vector<std::size_t> dirs(d);
  std::iota(dirs.begin(), dirs.end(), std::size_t{0});
  std::vector<std::size_t> choice(d);
  std::vector<std::vector<std::size_t>> contrib(d, std::vector<std::size_t>(n));
  Index beta(d);
  do {
    std::fill(choice.begin(), choice.end(), 0);
    for (;;) {
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t v = 0; v < n; ++v)
          contrib[k][v] = strides[dirs[k]] * static_cast<std::size_t>(perms[choice[k]][v]);
      // Walk output cells in offset order, comparing against the incumbent.
      for (std::size_t k = 0; k < d; ++k) beta[k] = 0;
      bool smaller = false;
      bool abandoned = false;
      for (std::size_t off = 0; off < cells; ++off) {
        std::size_t src = 0;
        for (std::size_t k = 0; k < d; ++k) src += contrib[k][beta[k]];
        const std::uint8_t bit = a.bits()[src];
        if (!smaller) {
          if (bit > best[off]) {
            abandoned = true;
            break;
          }
          if (bit < best[off]) smaller = true;
        }
        cur[off] = bit;
        next_index(beta, n);
      }
      if (!abandoned && smaller) best = cur;
      std::size_t k = d;
      while (k-- > 0) {
        if (++choice[k] < perms.size()) break;
        choice[k] = 0;
      }
      if (k == SIZE_MAX) break;
    }
  } while (std::next_permutation(dirs.begin(), dirs.end()));
  return BinaryTensor(d, n, std::move(best));
}

/// Lexicographically least image under direction permutations only. On
/// stepped tensors this is a complete equivalence invariant: equivalent
/// stepped tensors differ by a direction permutation.
inline BinaryTensor stepped_key(const BinaryTensor& a) {
  const std::size_t d = a.dim();
  std::vector<std::size_t> dirs(d);
  std::iota(dirs.begin(), dirs.end(), std::size_t{0});
  BinaryTensor best = a;
  GroupElement g = GroupElement::identity(d, a.order());
  while (std::next_permutation(dirs.begin(), dirs.end())) {
    g.directions = dirs;
    BinaryTensor img = apply(g, a);
    if (img.bits() < best.bits()) best = std::move(img);
  }
  return best;
}

}  // namespace polyplex
