#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace polyplex {
namespace {

using testing::q;

TEST(Rational, ParsesToLowestTerms) {
  EXPECT_EQ(parse_rational("2/4"), q(1, 2));
  EXPECT_EQ(parse_rational("-6/3"), q(-2));
  EXPECT_EQ(parse_rational("0/7"), q(0));
  EXPECT_EQ(to_string(parse_rational("10/15")), "2/3");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/2/3", "--1", "+1"})
    EXPECT_THROW(parse_rational(bad), DomainError) << bad;
}

TEST(Rational, HandlesValuesBeyondMachineWords) {
  const Rational big = parse_rational("123456789012345678901234567890/3");
  EXPECT_EQ(to_string(big), "41152263004115226300411522630");
  EXPECT_EQ(parse_rational(to_string(big / 7)), big / 7);
}

TEST(Rational, FormatParseRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational x = make_rational(num(rng), den(rng));
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
}

TEST(Io, TensorRoundTrip) {
  std::mt19937_64 rng(3);
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = 1; n <= 3; ++n) {
      const BinaryTensor a = testing::random_tensor(d, n, rng);
      EXPECT_EQ(io::parse_tensor(io::format_tensor(a)), a);
    }
}

TEST(Io, CoverRoundTrip) {
  const CoverTable c = testing::cover_of("cover 3 4\n4/5 2/5 1/5 0\n3/5 2/5 1/5 0\n3/5 2/5 1/5 0\n");
  EXPECT_EQ(io::format_cover(c), "cover 3 4\n4/5 2/5 1/5 0\n3/5 2/5 1/5 0\n3/5 2/5 1/5 0\n");
  EXPECT_EQ(io::parse_cover(io::format_cover(c)), c);
  EXPECT_EQ(c.weight(), q(19, 5));
}

TEST(Io, PolyplexRoundTripSkipsZeros) {
  const Polyplex k = io::parse_polyplex("polyplex 2 2\n1 1 1/2\n2 2 1/2\n# trailing comment\n");
  EXPECT_EQ(k.weight(), q(1));
  EXPECT_EQ(io::parse_polyplex(io::format_polyplex(k)), k);
  EXPECT_EQ(io::format_polyplex(k), "polyplex 2 2\n1 1 1/2\n2 2 1/2\n");
}

TEST(Io, CommentsAndBlankLinesAreIgnored) {
  const BinaryTensor a = io::parse_tensor("# header comment\n\ntensor 2 2\n  # indented comment\n1 0\n\n0 1\n");
  EXPECT_EQ(a, testing::tensor_of(2, 2, "1001"));
  // Only whole-line comments are recognised.
  EXPECT_THROW(io::parse_tensor("tensor 2 2\n1 0 # no\n0 1\n"), ParseError);
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
};

TEST(Io, TensorErrorsCarryLineAndColumn) {
  const BadInput cases[] = {
      {"tensor 2 2\n1 1\n1 x\n", 3, 3},
      {"tensr 2 2\n", 1, 1},
      {"tensor 2 q\n", 1, 10},
      {"tensor 2 2\n1 1\n1\n", 3, 1},
      {"tensor 2 2\n1 1 1 1 0\n", 2, 9},
      {"tensor 1 2\n1 1\n", 1, 8},
  };
  for (const BadInput& c : cases) {
    try {
      io::parse_tensor(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
    }
  }
}

TEST(Io, CoverErrorsCarryLineAndColumn) {
  const BadInput cases[] = {
      {"cover 2 2\n1 0\n", 2, 1},
      {"cover 2 2\n1 0\n1\n", 3, 1},
      {"cover 2 2\n1 0\n1 1/0\n", 3, 3},
      {"cover 2 2\n1 0\n-1/2 0\n", 3, 1},
  };
  for (const BadInput& c : cases) {
    try {
      io::parse_cover(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
    }
  }
}

TEST(Io, PolyplexRejectsDuplicatesAndNonpositive) {
  EXPECT_THROW(io::parse_polyplex("polyplex 2 2\n1 1 1/2\n1 1 1/4\n"), ParseError);
  EXPECT_THROW(io::parse_polyplex("polyplex 2 2\n1 1 0\n"), ParseError);
  EXPECT_THROW(io::parse_polyplex("polyplex 2 2\n3 1 1\n"), ParseError);
}

}  // namespace
}  // namespace polyplex
