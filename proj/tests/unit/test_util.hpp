#pragma once

// Helpers shared by the unit tests: literal construction, seeded random
// tensors and small brute-force oracles that do not go through the LP.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "polyplex/polyplex.hpp"

namespace polyplex::testing {

inline BinaryTensor tensor_of(std::size_t d, std::size_t n, const std::string& bits) {
  std::vector<std::uint8_t> cells;
  for (char c : bits)
    if (c == '0' || c == '1') cells.push_back(c == '1');
  return BinaryTensor(d, n, std::move(cells));
}

inline CoverTable cover_of(const std::string& text) { return io::parse_cover(text); }

inline Rational q(long p, long r = 1) { return make_rational(p, r); }

inline BinaryTensor random_tensor(std::size_t d, std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  BinaryTensor a(d, n);
  for (std::size_t off = 0; off < a.cell_count(); ++off) a.set(off, coin(rng));
  return a;
}

/// Maximum matching of a bipartite 0/1 matrix by augmenting paths.
inline std::size_t bipartite_matching(const BinaryTensor& a) {
  const std::size_t n = a.order();
  std::vector<int> match_col(n, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!a(Index{static_cast<int>(r), static_cast<int>(c)}) || seen[c]) continue;
      seen[c] = true;
      if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]), seen)) {
        match_col[c] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    if (augment(r, seen)) ++size;
  }
  return size;
}

/// Diagonal existence by trying every (d-1)-tuple of permutations.
inline bool brute_force_diagonal(const BinaryTensor& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  std::vector<std::size_t> choice(d - 1, 0);
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      Index idx(d);
      idx[0] = static_cast<int>(j);
      for (std::size_t i = 1; i < d; ++i) idx[i] = perms[choice[i - 1]][j];
      ok = a(idx);
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == perms.size()) choice[k++] = 0;
    if (k == choice.size()) return false;
  }
}

/// Every tensor of the given shape, as flattened bit patterns.
template <class Visit>
void for_each_tensor(std::size_t d, std::size_t n, Visit&& visit) {
  const std::size_t cells = checked_cell_count(d, n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    BinaryTensor a(d, n);
    for (std::size_t off = 0; off < cells; ++off) a.set(off, (mask >> off) & 1U);
    visit(a);
  }
}

}  // namespace polyplex::testing
