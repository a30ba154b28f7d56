#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace polyplex {
namespace {

using testing::cover_of;
using testing::q;
using testing::tensor_of;

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f = load_fixtures();
  return f;
}

/// Extremality straight from the definition, with the bipartite-matching or
/// brute-force diagonal oracle standing in for the polydiagonal test in d = 2.
bool extremal_by_definition_2d(const BinaryTensor& a) {
  const std::size_t n = a.order();
  if (testing::bipartite_matching(a) == n) return false;
  for (std::size_t off = 0; off < a.cell_count(); ++off) {
    if (a.at(off)) continue;
    BinaryTensor b = a;
    b.set(off, true);
    if (testing::bipartite_matching(b) != n) return false;
  }
  return true;
}

TEST(Extremal, KonigPatternWithTwoFullRows) {
  const ExtremalityVerdict v = is_extremal(tensor_of(2, 3, "111 111 000"));
  EXPECT_TRUE(v.is_extremal);
  EXPECT_EQ(v.deficiency, 1);
  EXPECT_FALSE(v.has_polydiagonal);
  EXPECT_FALSE(v.failing_zero.has_value());
}

TEST(Extremal, AllOnesHasPolydiagonal) {
  const ExtremalityVerdict v = is_extremal(BinaryTensor::filled(3, 3, true));
  EXPECT_FALSE(v.is_extremal);
  EXPECT_TRUE(v.has_polydiagonal);
  EXPECT_EQ(v.deficiency, 0);
}

TEST(Extremal, FailingZeroIsReported) {
  // One full row in order 3 leaves deficiency 2 > 1: not extremal.
  const ExtremalityVerdict v = is_extremal(tensor_of(2, 3, "111 000 000"));
  EXPECT_FALSE(v.is_extremal);
  ASSERT_TRUE(v.failing_zero.has_value());
  BinaryTensor b = tensor_of(2, 3, "111 000 000");
  b.set(*v.failing_zero, true);
  EXPECT_FALSE(has_polydiagonal(b));
}

TEST(Extremal, OrderOneConvention) {
  EXPECT_TRUE(is_extremal(BinaryTensor(3, 1)).is_extremal);
  EXPECT_EQ(is_extremal(BinaryTensor(3, 1)).deficiency, 1);
  EXPECT_FALSE(is_extremal(BinaryTensor::filled(3, 1, true)).is_extremal);
}

TEST(Extremal, TwoDimensionalMatchesDefinitionOracle) {
  for (std::size_t n = 1; n <= 3; ++n)
    testing::for_each_tensor(2, n, [](const BinaryTensor& a) {
      ASSERT_EQ(is_extremal(a).is_extremal, extremal_by_definition_2d(a)) << io::format_tensor(a);
    });
}

TEST(Extremal, FixturesAreExtremalWithPrintedDeficiency) {
  for (const Fixture& f : fixtures()) {
    if (!f.tensor || !f.delta) continue;
    const ExtremalityVerdict v = is_extremal(*f.tensor);
    EXPECT_TRUE(v.is_extremal) << f.name;
    EXPECT_EQ(v.deficiency, *f.delta) << f.name;
  }
}

TEST(DiagonalExtremal, FixturesAndTwoDimensionalMatrices) {
  for (const Fixture& f : fixtures())
    if (f.tensor && f.delta) {
      EXPECT_TRUE(is_diagonally_extremal(*f.tensor).diagonally_extremal) << f.name;
    }
  for (std::size_t n = 2; n <= 3; ++n)
    testing::for_each_tensor(2, n, [](const BinaryTensor& a) {
      if (is_extremal(a).is_extremal) {
        EXPECT_TRUE(is_diagonally_extremal(a).diagonally_extremal);
      }
    });
}

TEST(DiagonalExtremal, ImpliesExtremalOverSweep) {
  std::size_t positives = 0;
  auto check = [&](const BinaryTensor& a) {
    if (has_polydiagonal(a)) return;
    if (!is_diagonally_extremal(a).diagonally_extremal) return;
    ++positives;
    EXPECT_TRUE(is_extremal(a).is_extremal) << io::format_tensor(a);
  };
  testing::for_each_tensor(3, 2, check);
  testing::for_each_tensor(2, 3, check);
  enumerate_stepped(3, 3, [&](const BinaryTensor& a) {
    check(a);
    return true;
  });
  EXPECT_GT(positives, 5u);
}

TEST(DiagonalExtremal, SingleOneCellCube) {
  // Only (1,1,1) is set. Deleting around (2,2,2) leaves that cell, which is a
  // diagonal; deleting around any other zero leaves a 0-cell.
  const BinaryTensor a = tensor_of(3, 2, "1000 0000");
  const DiagonalExtremality de = is_diagonally_extremal(a);
  EXPECT_FALSE(de.diagonally_extremal);
  ASSERT_TRUE(de.failing_zero.has_value());
  EXPECT_FALSE(find_diagonal(delete_around(a, *de.failing_zero)).has_value());
  EXPECT_FALSE(is_extremal(a).is_extremal);
  EXPECT_THROW(is_diagonally_extremal(BinaryTensor::filled(2, 2, true)), PreconditionError);
}

TEST(OrderTwo, ExtremalIffAntipodalWithoutPolydiagonal) {
  for (std::size_t d = 2; d <= 4; ++d)
    testing::for_each_tensor(d, 2, [](const BinaryTensor& a) {
      const bool rhs = is_antipodal(a) && !has_polydiagonal(a);
      ASSERT_EQ(is_extremal(a).is_extremal, rhs) << io::format_tensor(a);
    });
}

TEST(OrderTwo, CoverGeneratedMatricesWithPolydiagonalHaveDiagonal) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> v(0, 6);
  std::size_t hits = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const std::size_t d = 2 + rep % 4;
    CoverTable c(d, 2);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < 2; ++j) c.set(i, j, make_rational(v(rng), 6));
    const BinaryTensor a = induced_matrix(c);
    if (!has_polydiagonal(a)) continue;
    ++hits;
    EXPECT_TRUE(find_diagonal(a).has_value()) << io::format_cover(c);
  }
  EXPECT_GT(hits, 50u);
}

TEST(OrderThree, ZeroDeletionsHaveDiagonalOrAreExtremal) {
  for (const Fixture& f : fixtures()) {
    if (!f.tensor || !f.delta || f.tensor->order() != 3) continue;
    for (const Index& alpha : f.tensor->zeros()) {
      const BinaryTensor minor = delete_around(*f.tensor, alpha);
      EXPECT_TRUE(find_diagonal(minor).has_value() || is_extremal(minor).is_extremal) << f.name;
    }
  }
}

TEST(MinorPolydiagonal, FixturesPass) {
  for (const char* name : {"appendix_d3n2", "appendix_d4n2"}) {
    const Fixture& f = find_fixture(fixtures(), name);
    const MinorPolydiagonalReport r = check_minor_polydiagonal(*f.tensor, *f.cover, *f.delta);
    EXPECT_TRUE(r.all_passed()) << name;
  }
  for (const Fixture& f : fixtures())
    if (f.tensor && f.cover && f.delta) {
      EXPECT_TRUE(check_minor_polydiagonal(*f.tensor, *f.cover, *f.delta).all_passed()) << f.name;
    }
}

TEST(MinorPolydiagonal, ReportListsQualifyingPairs) {
  const Fixture& f = find_fixture(fixtures(), "appendix_d3n2");
  const MinorPolydiagonalReport r = check_minor_polydiagonal(*f.tensor, *f.cover, *f.delta);
  ASSERT_FALSE(r.checks.empty());
  for (const MinorCheck& m : r.checks) {
    EXPECT_FALSE((*f.tensor)(m.beta));
    EXPECT_EQ(cover_weight_at(*f.cover, m.alpha), Rational(1) - *f.delta);
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_LE((*f.cover)(i, static_cast<std::size_t>(m.beta[i])), (*f.cover)(i, static_cast<std::size_t>(m.alpha[i])));
  }
}

TEST(Rearrangement, SmallTables) {
  EXPECT_TRUE(rearrangement_feasible(cover_of("cover 3 1\n1/2\n1/2\n1/2\n")));
  EXPECT_TRUE(rearrangement_feasible(cover_of("cover 2 2\n1 0\n1 0\n")));
  EXPECT_FALSE(rearrangement_feasible(CoverTable(2, 2)));
  EXPECT_FALSE(rearrangement_feasible(cover_of("cover 2 2\n1 0\n0 0\n")));
  EXPECT_TRUE(rearrangement_feasible(cover_of("cover 3 2\n1/2 1/2\n1/2 0\n0 1/2\n")));
}

TEST(Rearrangement, MatchesDiagonalInDeletedCoverMatrix) {
  // For A = A(Λ) and a zero α, A_α has a diagonal iff Λ_α can be rearranged.
  for (const Fixture& f : fixtures()) {
    if (!f.tensor || !f.cover) continue;
    for (const Index& alpha : f.tensor->zeros()) {
      const bool diag = find_diagonal(delete_around(*f.tensor, alpha)).has_value();
      EXPECT_EQ(rearrangement_feasible(delete_weights(*f.cover, alpha)), diag) << f.name;
    }
  }
}

}  // namespace
}  // namespace polyplex
