#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "test_util.hpp"

namespace polyplex {
namespace {

using testing::cover_of;
using testing::q;
using testing::tensor_of;

namespace fs = std::filesystem;

std::set<BinaryTensor> stepped_classes_by_brute_force(std::size_t d, std::size_t n) {
  std::set<BinaryTensor> classes;
  testing::for_each_tensor(d, n, [&](const BinaryTensor& a) {
    if (is_stepped(a)) classes.insert(canonical_form(a));
  });
  return classes;
}

std::set<BinaryTensor> enumerated_classes(std::size_t d, std::size_t n) {
  std::set<BinaryTensor> classes;
  std::size_t visited = 0;
  const std::size_t reported = enumerate_stepped(d, n, [&](const BinaryTensor& a) {
    EXPECT_TRUE(is_stepped(a));
    classes.insert(canonical_form(a));
    ++visited;
  });
  EXPECT_EQ(reported, visited);
  EXPECT_EQ(classes.size(), visited) << "duplicate class at d=" << d << " n=" << n;
  return classes;
}

TEST(EnumerateStepped, MatchesBruteForceClasses) {
  for (auto [d, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}})
    EXPECT_EQ(enumerated_classes(d, n), stepped_classes_by_brute_force(d, n)) << "d=" << d << " n=" << n;
}

TEST(EnumerateStepped, SmallCounts) {
  EXPECT_EQ(enumerated_classes(2, 1).size(), 2u);
  EXPECT_EQ(enumerated_classes(2, 2).size(), 5u);
  // Partitions in a 3x3 box (20) up to conjugation (8 self-conjugate).
  EXPECT_EQ(enumerated_classes(2, 3).size(), 14u);
}

TEST(EnumerateStepped, OrderThreeCubeContainsBothAppendixClasses) {
  const auto fixtures = load_fixtures();
  std::set<BinaryTensor> extremal;
  enumerate_stepped(3, 3, [&](const BinaryTensor& a) {
    if (is_extremal(a).is_extremal) extremal.insert(canonical_form(a));
  });
  for (const char* name : {"appendix_d3n3_1", "appendix_d3n3_2"})
    EXPECT_EQ(extremal.count(canonical_form(*find_fixture(fixtures, name).tensor)), 1u) << name;
}

TEST(EnumerateStepped, GuardAndPreconditions) {
  EXPECT_THROW(enumerate_stepped(3, 3, [](const BinaryTensor&) {}, 10), GuardError);
  EXPECT_THROW(enumerate_stepped(1, 3, [](const BinaryTensor&) {}), PreconditionError);
}

TEST(EnumerateAntipodal, MatchesBruteForceClasses) {
  for (std::size_t d = 2; d <= 4; ++d) {
    std::set<BinaryTensor> brute;
    testing::for_each_tensor(d, 2, [&](const BinaryTensor& a) {
      if (is_antipodal(a)) brute.insert(canonical_form(a));
    });
    std::set<BinaryTensor> found;
    enumerate_antipodal(d, [&](const BinaryTensor& a) {
      EXPECT_TRUE(is_antipodal(a));
      found.insert(canonical_form(a));
    });
    EXPECT_EQ(found, brute) << "d=" << d;
  }
}

TEST(EnumerateAntipodal, ExtremalClassesInLowDimensions) {
  const auto fixtures = load_fixtures();
  auto extremal_classes = [](std::size_t d) {
    std::set<BinaryTensor> out;
    enumerate_antipodal(d, [&](const BinaryTensor& a) {
      if (!has_polydiagonal(a)) out.insert(canonical_form(a));
    });
    return out;
  };
  const auto d2 = extremal_classes(2);
  ASSERT_EQ(d2.size(), 1u);
  EXPECT_EQ(is_extremal(*d2.begin()).deficiency, q(1));
  const auto d3 = extremal_classes(3);
  EXPECT_EQ(d3.size(), 2u);
  EXPECT_EQ(d3.count(canonical_form(*find_fixture(fixtures, "appendix_d3n2").tensor)), 1u);
  for (const BinaryTensor& a : d3) EXPECT_TRUE(is_extremal(a).is_extremal);
}

TEST(EnumerateAntipodal, RandomizedSamplesAreAntipodalAndSeeded) {
  AntipodalOptions opt;
  opt.randomized = true;
  opt.samples = 12;
  opt.seed = 5;
  std::vector<BinaryTensor> first;
  enumerate_antipodal(6, [&](const BinaryTensor& a) {
    EXPECT_TRUE(is_antipodal(a));
    first.push_back(a);
  }, opt);
  EXPECT_EQ(first.size(), 12u);
  std::vector<BinaryTensor> second;
  enumerate_antipodal(6, [&](const BinaryTensor& a) {
    second.push_back(a);
  }, opt);
  EXPECT_EQ(first, second);
  EXPECT_THROW(enumerate_antipodal(7, [](const BinaryTensor&) {}), PreconditionError);
}

TEST(Fixtures, CountsAndRoles) {
  const auto fixtures = load_fixtures();
  std::size_t core = 0;
  for (const Fixture& f : fixtures) {
    if (f.role != "core") continue;
    ++core;
    ASSERT_TRUE(f.tensor && f.cover && f.delta) << f.name;
  }
  EXPECT_EQ(core, 25u);
  EXPECT_EQ(fixtures.size(), 29u);
  EXPECT_THROW(find_fixture(fixtures, "nonexistent"), DomainError);
}

TEST(Fixtures, ChecksumCatchesTampering) {
  const fs::path dir = fs::temp_directory_path() / "polyplex_fixture_tamper";
  fs::remove_all(dir);
  fs::copy(kDefaultFixtureDir, dir);
  EXPECT_NO_THROW(load_fixtures(dir.string()));
  const std::string path = (dir / "appendix_d3n2.cover").string();
  std::string text = io::read_file(path);
  text.replace(text.find("1/2"), 3, "1/3");
  io::write_file(path, text);
  try {
    load_fixtures(dir.string());
    FAIL() << "tampered fixture loaded";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("appendix_d3n2"), std::string::npos);
  }
  fs::remove_all(dir);
}

TEST(Harness, EmptyConfigGivesEmptyReport) {
  const ConjectureReport r = run_conjecture_harness(HarnessConfig{});
  EXPECT_TRUE(r.sweeps.empty());
  EXPECT_TRUE(r.classes.empty());
  EXPECT_TRUE(r.witnesses.empty());
  for (const Tally& t : r.tallies) EXPECT_EQ(t.checked, 0u) << t.info.slug;
  EXPECT_TRUE(r.gating_passed());
}

TEST(Harness, DeterministicReportBytes) {
  SweepConfig s;
  s.mode = SweepMode::kRandomFlips;
  s.d_range = {3, 3};
  s.n_range = {2, 3};
  s.samples = 4;
  s.seed = 11;
  EXPECT_EQ(run_conjecture_harness(s).to_text(), run_conjecture_harness(s).to_text());
}

TEST(Harness, FixturesOnlyRunPassesGatingChecks) {
  HarnessConfig h;
  h.fixtures = true;
  const ConjectureReport r = run_conjecture_harness(h);
  EXPECT_TRUE(r.gating_passed()) << r.to_text();
  EXPECT_TRUE(r.theorems_passed()) << r.to_text();
  EXPECT_GE(r.tally("unique-cover").checked, 25u);
  EXPECT_EQ(r.tally("fixture-reproduction").failed(), 0u);
}

TEST(Harness, OrderTwoSweepDeficiencies) {
  SweepConfig s;
  s.mode = SweepMode::kSteppedExhaustive;
  s.d_range = {2, 4};
  s.n_range = {2, 2};
  const ConjectureReport r = run_conjecture_harness(s);
  const std::set<Rational> allowed{q(1), q(1, 2), q(1, 3)};
  for (const SweepSummary& sw : r.sweeps)
    for (const auto& [delta, count] : sw.deficiencies) EXPECT_EQ(allowed.count(delta), 1u) << to_string(delta);
  EXPECT_TRUE(r.gating_passed());
}

TEST(Harness, ParseSweepMode) {
  EXPECT_EQ(parse_sweep_mode("stepped"), SweepMode::kSteppedExhaustive);
  EXPECT_EQ(parse_sweep_mode("antipodal"), SweepMode::kAntipodalOrder2);
  EXPECT_EQ(parse_sweep_mode("random"), SweepMode::kRandomFlips);
  EXPECT_THROW(parse_sweep_mode("sideways"), PreconditionError);
}

TEST(Witness, ConstructedCounterexamplesRoundTrip) {
  ConjectureReport r;
  // A non-extremal tensor refutes the maximality check; a wrong cover
  // refutes fixture reproduction.
  r.witnesses.push_back({"random-flip-maximality", "flip_witness", "test", "not extremal",
                         tensor_of(2, 3, "111 100 000"), std::nullopt});
  r.witnesses.push_back({"fixture-reproduction", "cover_witness", "test", "cover differs",
                         tensor_of(3, 2, "11 10 10 00"), cover_of("cover 3 2\n1/2 0\n1/2 0\n1/2 0\n")});
  const fs::path dir = fs::temp_directory_path() / "polyplex_witness_roundtrip";
  fs::remove_all(dir);
  const auto paths = r.write_witnesses(dir.string());
  EXPECT_EQ(paths.size(), 3u);

  const Witness flip = load_witness((dir / "flip_witness.tensor").string());
  EXPECT_EQ(flip.check, "random-flip-maximality");
  EXPECT_EQ(flip.tensor, r.witnesses[0].tensor);
  EXPECT_FALSE(flip.cover.has_value());
  EXPECT_TRUE(verify_witness(flip));

  const Witness cov = load_witness((dir / "cover_witness.tensor").string());
  ASSERT_TRUE(cov.cover.has_value());
  EXPECT_EQ(*cov.cover, *r.witnesses[1].cover);
  EXPECT_EQ(verify_witness(cov), evaluate_check("fixture-reproduction", cov.tensor, cov.cover).applicable &&
                                     !evaluate_check("fixture-reproduction", cov.tensor, cov.cover).passed);
  fs::remove_all(dir);
}

TEST(Witness, TrueStatementsDoNotVerifyAsCounterexamples) {
  const auto fixtures = load_fixtures();
  const Fixture& f = find_fixture(fixtures, "appendix_d3n2");
  for (const char* slug : {"unique-cover", "unit-fraction-deficiency", "deficiency-multiples", "diagonal-extremality"})
    EXPECT_FALSE(verify_witness(Witness{slug, "w", "test", "", *f.tensor, f.cover})) << slug;
  EXPECT_FALSE(verify_witness(Witness{"order-two-characterization", "w", "test", "", *f.tensor, std::nullopt}));
  EXPECT_FALSE(verify_witness(Witness{"two-dimensional-characterization", "w", "test", "",
                                      tensor_of(2, 3, "111 100 100"), std::nullopt}));
  // Hypothesis not met: no counterexample either way.
  const CheckResult r = evaluate_check("unique-cover", BinaryTensor::filled(3, 2, true));
  EXPECT_FALSE(r.applicable);
  EXPECT_THROW(evaluate_check("no-such-check", *f.tensor), PreconditionError);
}

TEST(Witness, FileWithoutCheckIsRejected) {
  const fs::path p = fs::temp_directory_path() / "polyplex_bad_witness.tensor";
  io::write_file(p.string(), "tensor 2 2\n1 0\n0 1\n");
  EXPECT_THROW(load_witness(p.string()), DomainError);
  fs::remove(p);
}

}  // namespace
}  // namespace polyplex
