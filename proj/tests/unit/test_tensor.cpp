#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "test_util.hpp"

namespace polyplex {
namespace {

using testing::tensor_of;

/// Every image of `a` under S_d x (S_n)^d, via apply().
std::set<std::vector<std::uint8_t>> orbit(const BinaryTensor& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::vector<std::uint8_t>> out;
  GroupElement g = GroupElement::identity(d, n);
  std::vector<std::size_t> dirs(d);
  std::iota(dirs.begin(), dirs.end(), std::size_t{0});
  do {
    g.directions = dirs;
    std::vector<std::size_t> choice(d, 0);
    while (true) {
      for (std::size_t k = 0; k < d; ++k) g.positions[k] = perms[choice[k]];
      out.insert(apply(g, a).bits());
      std::size_t k = 0;
      while (k < d && ++choice[k] == perms.size()) choice[k++] = 0;
      if (k == d) break;
    }
  } while (std::next_permutation(dirs.begin(), dirs.end()));
  return out;
}

TEST(Tensor, OffsetsAreRowMajor) {
  const BinaryTensor a = tensor_of(3, 2, "10000000");
  EXPECT_TRUE(a(Index{0, 0, 0}));
  BinaryTensor b(3, 3);
  b.set(Index{1, 2, 0}, true);
  EXPECT_EQ(b.offset(Index{1, 2, 0}), 15u);
  EXPECT_EQ(b.index_at(15), (Index{1, 2, 0}));
  EXPECT_EQ(b.ones(), 1u);
}

TEST(Tensor, ConstructorValidatesShape) {
  EXPECT_THROW(BinaryTensor(2, 2, std::vector<std::uint8_t>{1, 0, 1}), PreconditionError);
  EXPECT_THROW(BinaryTensor(2, 2, std::vector<std::uint8_t>{1, 0, 2, 0}), PreconditionError);
  EXPECT_THROW(BinaryTensor(40, 2), DomainError);
}

TEST(Tensor, SliceFixesOneCoordinate) {
  // a(i,j,k) = 1 iff i == 0 or (j == 1 and k == 1).
  const BinaryTensor a = tensor_of(3, 2, "1111 0001");
  EXPECT_EQ(slice(a, {0, 0}), tensor_of(2, 2, "1111"));
  EXPECT_EQ(slice(a, {0, 1}), tensor_of(2, 2, "0001"));
  EXPECT_EQ(slice(a, {1, 0}), tensor_of(2, 2, "1100"));
  EXPECT_EQ(slice(a, {2, 1}), tensor_of(2, 2, "1101"));
  EXPECT_THROW(slice(a, {3, 0}), PreconditionError);
  EXPECT_THROW(slice(a, {0, 2}), PreconditionError);
}

TEST(Tensor, DeleteAroundDropsEveryHyperplaneThroughAlpha) {
  const BinaryTensor a = tensor_of(2, 3, "100 010 001");
  EXPECT_EQ(delete_around(a, Index{1, 1}), tensor_of(2, 2, "1001"));
  EXPECT_EQ(delete_around(a, Index{0, 1}), tensor_of(2, 2, "0001"));
  EXPECT_THROW(delete_around(tensor_of(2, 1, "1"), Index{0, 0}), PreconditionError);
}

TEST(Tensor, AntipodalMeansComplementaryCellsDiffer) {
  EXPECT_TRUE(is_antipodal(tensor_of(2, 2, "1100")));
  EXPECT_FALSE(is_antipodal(tensor_of(2, 2, "1001")));
  // Majority of three bits, complemented so the all-zero index is a 1-cell.
  EXPECT_TRUE(is_antipodal(tensor_of(3, 2, "1110 1000")));
  EXPECT_THROW(is_antipodal(tensor_of(2, 3, "000000000")), PreconditionError);
}

TEST(Tensor, SteppedMeansDownwardClosed) {
  EXPECT_TRUE(is_stepped(tensor_of(2, 3, "111 110 100")));
  EXPECT_FALSE(is_stepped(tensor_of(2, 3, "111 011 100")));
  EXPECT_FALSE(is_stepped(tensor_of(2, 2, "1001")));
  EXPECT_TRUE(is_stepped(BinaryTensor(3, 3)));
}

TEST(Tensor, TransposeSwapsDirections) {
  const BinaryTensor a = tensor_of(2, 3, "110 000 000");
  EXPECT_EQ(transpose(a, 0, 1), tensor_of(2, 3, "100 100 000"));
  EXPECT_EQ(transpose(transpose(a, 0, 1), 0, 1), a);
}

TEST(Tensor, GroupOrder) {
  EXPECT_EQ(group_order(2, 2), 8u);
  EXPECT_EQ(group_order(3, 3), 6u * 216u);
  EXPECT_EQ(group_order(3, 4), 6u * 13824u);
}

TEST(CanonicalForm, IsTheMinimumOfTheBruteForceOrbit) {
  std::mt19937_64 rng(17);
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (const auto& [d, n] : shapes)
    for (int rep = 0; rep < 8; ++rep) {
      const BinaryTensor a = testing::random_tensor(d, n, rng);
      const auto images = orbit(a);
      EXPECT_EQ(canonical_form(a).bits(), *images.begin()) << io::format_tensor(a);
    }
}

TEST(CanonicalForm, IsInvariantUnderRandomGroupElements) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const BinaryTensor a = testing::random_tensor(3, 3, rng);
    GroupElement g = GroupElement::identity(3, 3);
    std::shuffle(g.directions.begin(), g.directions.end(), rng);
    for (auto& p : g.positions) std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(canonical_form(apply(g, a)), canonical_form(a));
  }
}

TEST(CanonicalForm, RespectsGuard) {
  EXPECT_THROW(canonical_form(BinaryTensor(3, 4), 1000), GuardError);
}

TEST(CanonicalForm, CountsOrbitsOfSmallShapes) {
  // Square 0/1 matrices up to row, column and transpose symmetry: 6 for 2x2,
  // 26 for 3x3 (Burnside count).
  std::set<std::vector<std::uint8_t>> d2n2;
  testing::for_each_tensor(2, 2, [&](const BinaryTensor& a) { d2n2.insert(canonical_form(a).bits()); });
  EXPECT_EQ(d2n2.size(), 6u);
  std::set<std::vector<std::uint8_t>> d2n3;
  testing::for_each_tensor(2, 3, [&](const BinaryTensor& a) { d2n3.insert(canonical_form(a).bits()); });
  EXPECT_EQ(d2n3.size(), 26u);
}

TEST(CanonicalForm, SteppedTwoByTwoHasFiveClasses) {
  std::set<std::vector<std::uint8_t>> classes;
  testing::for_each_tensor(2, 2, [&](const BinaryTensor& a) {
    if (is_stepped(canonical_form(a)) || is_stepped(a)) classes.insert(canonical_form(a).bits());
  });
  // The permutation matrix is not equivalent to a stepped matrix.
  EXPECT_EQ(classes.size(), 5u);
  EXPECT_EQ(classes.count(canonical_form(tensor_of(2, 2, "1001")).bits()), 0u);
}

TEST(SteppedKey, AgreesWithCanonicalFormOnSteppedTensors) {
  std::set<std::vector<std::uint8_t>> by_key;
  std::set<std::vector<std::uint8_t>> by_canon;
  testing::for_each_tensor(3, 2, [&](const BinaryTensor& a) {
    if (!is_stepped(a)) return;
    by_key.insert(stepped_key(a).bits());
    by_canon.insert(canonical_form(a).bits());
  });
  EXPECT_EQ(by_key.size(), by_canon.size());
  EXPECT_EQ(by_key.size(), 10u);
}

}  // namespace
}  // namespace polyplex
