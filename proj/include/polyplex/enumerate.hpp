#pragma once

// Enumeration of stepped tensors and antipodal order-2 tensors, one
// representative per equivalence class.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polyplex/error.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

inline constexpr std::size_t kDefaultEnumerationGuard = 2'000'000;

/// `fallback`, unless the POLYPLEX_GUARD environment variable holds a
/// positive integer.
inline std::size_t guard_from_env(std::size_t fallback) {
  const char* raw = std::getenv("POLYPLEX_GUARD");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw PreconditionError(std::string("POLYPLEX_GUARD must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(v);
}

namespace detail {

using Bits = std::vector<std::uint8_t>;

/// For each set, the indices of the sets contained in it.
inline std::vector<std::vector<std::size_t>> containment(const std::vector<Bits>& sets) {
  std::vector<std::vector<std::size_t>> subsets(sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) {
      bool inside = true;
      for (std::size_t c = 0; c < sets[a].size() && inside; ++c) inside = sets[b][c] <= sets[a][c];
      if (inside) subsets[a].push_back(b);
    }
  return subsets;
}

/// All down-sets of [n]^k (k >= 0), each flattened with the last coordinate
/// fastest. Built as chains S_0 ⊇ ... ⊇ S_{n-1} of down-sets of [n]^{k-1}.
inline std::vector<Bits> downsets(std::size_t k, std::size_t n, std::size_t guard) {
  if (k == 0) return {Bits{0}, Bits{1}};
  const std::vector<Bits> lower = downsets(k - 1, n, guard);
  const std::size_t m = lower.size();
  const auto subsets = containment(lower);
  std::vector<Bits> out;
  std::vector<std::size_t> chain;
  auto rec = [&](auto&& self) -> void {
    if (chain.size() == n) {
      if (out.size() >= guard) throw GuardError("stepped enumeration exceeds the guard");
      Bits bits;
      for (std::size_t s : chain) bits.insert(bits.end(), lower[s].begin(), lower[s].end());
      out.push_back(std::move(bits));
      return;
    }
    auto place = [&](std::size_t s) {
      chain.push_back(s);
      self(self);
      chain.pop_back();
    };
    if (chain.empty())
      for (std::size_t s = 0; s < m; ++s) place(s);
    else
      for (std::size_t s : subsets[chain.back()]) place(s);
  };
  rec(rec);
  return out;
}

/// Number of chains of length n in the containment order of `sets`.
inline std::size_t count_chains(const std::vector<std::vector<std::size_t>>& subsets, std::size_t n) {
  const std::size_t m = subsets.size();
  std::vector<long double> cur(m, 1.0L);
  for (std::size_t len = 2; len <= n; ++len) {
    std::vector<long double> next(m, 0.0L);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b : subsets[a]) next[a] += cur[b];
    cur = std::move(next);
  }
  long double total = 0;
  for (long double v : cur) total += v;
  return total > static_cast<long double>(SIZE_MAX) ? SIZE_MAX : static_cast<std::size_t>(total);
}

/// Source offsets of every non-identity direction permutation.
inline std::vector<std::vector<std::size_t>> direction_maps(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> dirs(d);
  std::iota(dirs.begin(), dirs.end(), std::size_t{0});
  const BinaryTensor shape(d, n);
  while (std::next_permutation(dirs.begin(), dirs.end())) {
    std::vector<std::size_t> map(shape.cell_count());
    Index beta(d);
    Index src(d);
    std::size_t off = 0;
    do {
      for (std::size_t k = 0; k < d; ++k) src[dirs[k]] = beta[k];
      map[off++] = shape.offset(src);
    } while (next_index(beta, n));
    maps.push_back(std::move(map));
  }
  return maps;
}

/// True iff no direction permutation yields a lexicographically smaller image.
inline bool is_direction_minimal(const Bits& bits, const std::vector<std::vector<std::size_t>>& maps) {
  for (const auto& map : maps) {
    for (std::size_t off = 0; off < bits.size(); ++off) {
      const std::uint8_t img = bits[map[off]];
      if (img < bits[off]) return false;
      if (img > bits[off]) break;
    }
  }
  return true;
}

}  // namespace detail

/// Number of stepped tensors (before identifying equivalent ones).
inline std::size_t count_stepped(std::size_t d, std::size_t n, std::size_t guard = kDefaultEnumerationGuard) {
  if (d < 1 || n < 1) throw PreconditionError("stepped enumeration needs d >= 1 and n >= 1");
  const auto lower = detail::downsets(d - 1, n, guard);
  const auto subsets = detail::containment(lower);
  return detail::count_chains(subsets, n);
}

/// Calls `visit` once per equivalence class of stepped d-dimensional tensors
/// of order n. The representative is the stepped tensor that is
/// lexicographically least among its direction permutations. Returns the
/// number of classes.
inline std::size_t enumerate_stepped(std::size_t d, std::size_t n,
                                     const std::function<void(const BinaryTensor&)>& visit,
                                     std::size_t guard = kDefaultEnumerationGuard) {
  if (d < 2) throw PreconditionError("stepped enumeration needs d >= 2");
  checked_cell_count(d, n);
  const auto lower = detail::downsets(d - 1, n, guard);
  const std::size_t m = lower.size();
  const auto subsets = detail::containment(lower);
  const std::size_t total = detail::count_chains(subsets, n);
  if (total > guard)
    throw GuardError("stepped enumeration for d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                     " has " + std::to_string(total) + " candidates, above the guard of " +
                     std::to_string(guard));
  const auto maps = detail::direction_maps(d, n);
  const std::size_t slice = lower.front().size();
  detail::Bits bits(slice * n);
  std::vector<std::size_t> chain;
  std::size_t classes = 0;
  auto rec = [&](auto&& self) -> void {
    if (chain.size() == n) {
      if (!detail::is_direction_minimal(bits, maps)) return;
      ++classes;
      visit(BinaryTensor(d, n, bits));
      return;
    }
    const std::size_t depth = chain.size();
    auto place = [&](std::size_t s) {
      std::copy(lower[s].begin(), lower[s].end(), bits.begin() + static_cast<std::ptrdiff_t>(depth * slice));
      chain.push_back(s);
      self(self);
      chain.pop_back();
    };
    if (chain.empty())
      for (std::size_t s = 0; s < m; ++s) place(s);
    else
      for (std::size_t s : subsets[chain.back()]) place(s);
  };
  rec(rec);
  return classes;
}

struct AntipodalOptions {
  /// Sample random assignments instead of running through all of them.
  /// Defaults to sampling when d >= 6.
  std::optional<bool> randomized;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
  std::size_t guard = kDefaultEnumerationGuard;
};

namespace detail {

/// Order-2 tensors with at most 64 cells as bit masks; cell 0 is the most
/// significant bit so that integer order is lexicographic order.
class Order2Group {
 public:
  explicit Order2Group(std::size_t d) : d_(d), cells_(std::size_t{1} << d) {
    std::vector<std::size_t> dirs(d);
    std::iota(dirs.begin(), dirs.end(), std::size_t{0});
    do {
      for (std::size_t flips = 0; flips < cells_; ++flips) {
        std::vector<std::uint8_t> src(cells_);
        for (std::size_t beta = 0; beta < cells_; ++beta) {
          std::size_t s = 0;
          for (std::size_t k = 0; k < d; ++k) {
            const std::size_t bit = (beta >> (d - 1 - k) & 1U) ^ (flips >> k & 1U);
            s |= bit << (d - 1 - dirs[k]);
          }
          src[beta] = static_cast<std::uint8_t>(s);
        }
        maps_.push_back(std::move(src));
      }
    } while (std::next_permutation(dirs.begin(), dirs.end()));
  }

  std::uint64_t apply(std::size_t g, std::uint64_t mask) const {
    std::uint64_t out = 0;
    const auto& src = maps_[g];
    for (std::size_t beta = 0; beta < cells_; ++beta)
      if (get(mask, src[beta])) out |= bit(beta);
    return out;
  }

  std::uint64_t orbit_min(std::uint64_t mask) const {
    std::uint64_t best = mask;
    for (std::size_t g = 0; g < maps_.size(); ++g) best = std::min(best, apply(g, mask));
    return best;
  }

  std::size_t size() const { return maps_.size(); }
  std::size_t cells() const { return cells_; }

  std::uint64_t bit(std::size_t off) const { return std::uint64_t{1} << (cells_ - 1 - off); }
  bool get(std::uint64_t mask, std::size_t off) const { return (mask & bit(off)) != 0; }

  /// Antipodal mask whose cells with first coordinate 1 are given by `x`.
  std::uint64_t from_assignment(std::uint64_t x) const {
    const std::size_t half = cells_ / 2;
    std::uint64_t mask = 0;
    for (std::size_t o = 0; o < half; ++o) {
      const bool v = (x >> o & 1U) != 0;
      mask |= v ? bit(o) : bit(cells_ - 1 - o);
    }
    return mask;
  }

  std::uint64_t to_assignment(std::uint64_t mask) const {
    std::uint64_t x = 0;
    for (std::size_t o = 0; o < cells_ / 2; ++o)
      if (get(mask, o)) x |= std::uint64_t{1} << o;
    return x;
  }

  BinaryTensor tensor(std::uint64_t mask) const {
    BinaryTensor t(d_, 2);
    for (std::size_t o = 0; o < cells_; ++o) t.set(o, get(mask, o));
    return t;
  }

 private:
  std::size_t d_;
  std::size_t cells_;
  std::vector<std::vector<std::uint8_t>> maps_;
};

}  // namespace detail

/// Calls `visit` once per equivalence class of antipodal order-2 tensors,
/// passing the canonical form. Exhaustive by default for d <= 5; sampled
/// (deduplicated) otherwise. Returns the number of classes visited.
inline std::size_t enumerate_antipodal(std::size_t d,
                                       const std::function<void(const BinaryTensor&)>& visit,
                                       AntipodalOptions options = {}) {
  if (d < 2 || d > 6) throw PreconditionError("antipodal enumeration supports 2 <= d <= 6");
  const bool randomized = options.randomized.value_or(d >= 6);
  const detail::Order2Group group(d);
  const std::size_t half = group.cells() / 2;
  std::size_t classes = 0;
  if (!randomized) {
    if (half >= 63 || (std::uint64_t{1} << half) > options.guard)
      throw GuardError("exhaustive antipodal enumeration for d=" + std::to_string(d) +
                       " exceeds the guard; use sampling");
    const std::uint64_t total = std::uint64_t{1} << half;
    std::vector<bool> seen(total, false);
    for (std::uint64_t x = 0; x < total; ++x) {
      if (seen[x]) continue;
      const std::uint64_t mask = group.from_assignment(x);
      std::uint64_t best = mask;
      for (std::size_t g = 0; g < group.size(); ++g) {
        const std::uint64_t img = group.apply(g, mask);
        seen[group.to_assignment(img)] = true;
        best = std::min(best, img);
      }
      ++classes;
      visit(group.tensor(best));
    }
    return classes;
  }
  if (options.samples > options.guard) throw GuardError("antipodal sample count exceeds the guard");
  std::mt19937_64 rng(options.seed);
  std::set<std::uint64_t> found;
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::uint64_t x = rng();
    if (half < 64) x &= (std::uint64_t{1} << half) - 1;
    const std::uint64_t canon = group.orbit_min(group.from_assignment(x));
    if (!found.insert(canon).second) continue;
    ++classes;
    visit(group.tensor(canon));
  }
  return classes;
}

}  // namespace polyplex
