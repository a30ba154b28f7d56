#pragma once

// Extremal matrices generated by the constructions, seeded from the fixture
// corpus, each with the cover and deficiency the construction predicts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyplex/constructions.hpp"
#include "polyplex/cover_table.hpp"
#include "polyplex/covers.hpp"
#include "polyplex/fixtures.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

struct ConstructedMatrix {
  /// "lift", "grow", "young" or "split".
  std::string kind;
  std::string label;
  BinaryTensor tensor;
  CoverTable cover;
  Rational delta;
};

namespace detail {

inline std::string cover_label(const CoverTable& c) {
  std::string s;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < c.order(); ++j) s += (j ? " " : "") + to_string(c(i, j));
  }
  return s;
}

inline ConstructedMatrix from_cover(std::string kind, std::string label, CoverTable cover,
                                    Rational delta) {
  BinaryTensor t = induced_matrix(cover);
  return {std::move(kind), std::move(label), std::move(t), std::move(cover), std::move(delta)};
}

struct Seed {
  std::string name;
  BinaryTensor tensor;
  CoverTable cover;
  Rational delta;
};

inline std::vector<Seed> seeds_from(const std::vector<Fixture>& fixtures) {
  std::vector<Seed> seeds;
  for (const Fixture& f : fixtures)
    if (f.role == "core" && f.tensor && f.cover && f.delta)
      seeds.push_back({f.name, *f.tensor, *f.cover, *f.delta});
  return seeds;
}

inline std::vector<ConstructedMatrix> lifts(const std::vector<Seed>& seeds) {
  std::vector<ConstructedMatrix> out;
  for (const Seed& s : seeds) {
    std::vector<std::vector<Rational>> rows = s.cover.rows();
    rows.emplace_back(s.cover.order(), Rational(0));
    out.push_back({"lift", "lift(" + s.name + ")", lift_dimension(s.tensor), CoverTable(std::move(rows)),
                   s.delta});
  }
  return out;
}

inline std::optional<Index> first_unit_index(const CoverTable& cover) {
  Index alpha(cover.dim());
  do {
    if (cover_weight_at(cover, alpha) == 1) return alpha;
  } while (next_index(alpha, cover.order()));
  return std::nullopt;
}

inline std::vector<ConstructedMatrix> grows(const std::vector<Seed>& seeds) {
  std::vector<ConstructedMatrix> out;
  for (const Seed& s : seeds) {
    const std::size_t d = s.cover.dim();
    out.push_back(from_cover("grow", "grow(" + s.name + ", attach 1 to row 1)",
                             grow_order(s.cover, AttachOne{0}), s.delta));
    if (auto alpha = first_unit_index(s.cover))
      out.push_back(from_cover("grow", "grow(" + s.name + ", duplicate " + alpha->to_string() + ")",
                               grow_order(s.cover, DuplicateIndex{*alpha}), s.delta));
    bool split_done = false;
    for (std::size_t j = 0; j < d && !split_done; ++j) {
      const auto& row = s.cover.row(j);
      if (std::find(row.begin(), row.end(), s.delta) == row.end()) continue;
      const std::size_t i = j == 0 ? 1 : 0;
      out.push_back(from_cover("grow",
                               "grow(" + s.name + ", 1-δ to row " + std::to_string(i + 1) + ", δ to row " +
                                   std::to_string(j + 1) + ")",
                               grow_order(s.cover, AttachSplit{i, j}), s.delta));
      split_done = true;
    }
  }
  return out;
}

inline std::vector<ConstructedMatrix> youngs() {
  std::vector<ConstructedMatrix> out;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t d = 2; d <= 5; ++d)
      for (std::size_t m = 1; m < d; ++m)
        for (const YoungDiagram& y : partitions(m * n - 1, d, n - 1)) {
          std::string parts;
          for (std::size_t p : y.parts) parts += (parts.empty() ? "" : ",") + std::to_string(p);
          out.push_back(from_cover("young",
                                   "young(" + parts + "; m=" + std::to_string(m) + ", d=" +
                                       std::to_string(d) + ", n=" + std::to_string(n) + ")",
                                   two_value_cover(y, m, d, n), Rational(1, static_cast<long>(m))));
        }
  return out;
}

/// Repeated splits of every order-2 seed: each split is tried on every row
/// whose essential weight is at least δ, up to dimension `max_dim`.
inline std::vector<ConstructedMatrix> splits(const std::vector<Seed>& seeds, std::size_t max_dim) {
  std::vector<ConstructedMatrix> out;
  struct Item {
    std::string label;
    CoverTable cover;
    Rational delta;
  };
  std::vector<Item> frontier;
  for (const Seed& s : seeds)
    if (s.cover.order() == 2) frontier.push_back({s.name, s.cover, s.delta});
  while (!frontier.empty()) {
    std::vector<Item> next;
    for (const Item& item : frontier) {
      if (item.cover.dim() >= max_dim) continue;
      for (std::size_t r = 0; r < item.cover.dim(); ++r) {
        const Rational essential = item.cover(r, 0) + item.cover(r, 1);
        if (essential <= item.delta) continue;
        CoverTable c;
        try {
          c = split_essential_weight(item.cover, item.delta, r);
        } catch (const PreconditionError&) {
          continue;
        }
        const std::string label = "split(" + item.label + ", row " + std::to_string(r + 1) + ")";
        out.push_back(from_cover("split", label, c, item.delta));
        next.push_back({label, c, item.delta});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Up to `limit` constructed matrices, taken round-robin from the four
/// construction kinds in a fixed order.
inline std::vector<ConstructedMatrix> construction_corpus(const std::vector<Fixture>& fixtures,
                                                          std::size_t limit = 100) {
  const auto seeds = detail::seeds_from(fixtures);
  const std::vector<std::vector<ConstructedMatrix>> kinds = {
      detail::lifts(seeds), detail::grows(seeds), detail::youngs(), detail::splits(seeds, 6)};
  std::vector<ConstructedMatrix> out;
  for (std::size_t i = 0; out.size() < limit; ++i) {
    bool any = false;
    for (const auto& kind : kinds) {
      if (i >= kind.size() || out.size() >= limit) continue;
      out.push_back(kind[i]);
      any = true;
    }
    if (!any) break;
  }
  return out;
}

}  // namespace polyplex
