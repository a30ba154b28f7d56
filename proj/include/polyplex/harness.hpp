#pragma once

// Conjecture harness. Every extremal matrix in the corpus (fixtures,
// constructions, sweeps) is checked against the open conjectures; proven
// statements are checked alongside as a guard against implementation bugs.
// Failures are data: they are tallied and serialized as witness files that
// can be re-verified independently.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyplex/corpus.hpp"
#include "polyplex/cover_table.hpp"
#include "polyplex/covers.hpp"
#include "polyplex/enumerate.hpp"
#include "polyplex/error.hpp"
#include "polyplex/exact_lp.hpp"
#include "polyplex/extremal.hpp"
#include "polyplex/fixtures.hpp"
#include "polyplex/io.hpp"
#include "polyplex/matching.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

enum class SweepMode { kSteppedExhaustive, kAntipodalOrder2, kRandomFlips };

inline std::string to_string(SweepMode m) {
  switch (m) {
    case SweepMode::kSteppedExhaustive: return "stepped";
    case SweepMode::kAntipodalOrder2: return "antipodal";
    case SweepMode::kRandomFlips: return "random";
  }
  return "?";
}

inline SweepMode parse_sweep_mode(std::string_view s) {
  if (s == "stepped") return SweepMode::kSteppedExhaustive;
  if (s == "antipodal") return SweepMode::kAntipodalOrder2;
  if (s == "random") return SweepMode::kRandomFlips;
  throw PreconditionError("unknown sweep mode '" + std::string(s) + "' (stepped, antipodal, random)");
}

/// Inclusive; empty when lo > hi.
struct SizeRange {
  std::size_t lo = 1;
  std::size_t hi = 0;
};

struct SweepConfig {
  SizeRange d_range;
  /// Ignored by the antipodal mode, which is order 2 by definition.
  SizeRange n_range;
  SweepMode mode = SweepMode::kSteppedExhaustive;
  std::uint64_t seed = 1;
  /// Ceiling on candidates per (d, n).
  std::size_t guard = kDefaultEnumerationGuard;
  /// Samples per (d, n) for random modes.
  std::size_t samples = 16;
};

struct HarnessConfig {
  std::vector<SweepConfig> sweeps;
  bool fixtures = false;
  bool constructions = false;
  std::size_t construction_limit = 100;
  std::string fixture_dir = kDefaultFixtureDir;
};

/// Gating checks decide the verdict; reported checks are informational;
/// theorem checks restate proven results and should never fail.
enum class Tier { kGating, kReported, kTheorem };

struct CheckInfo {
  std::string slug;
  Tier tier;
  std::string statement;
};

inline const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {"unique-cover", Tier::kGating, "every extremal matrix has a unique optimal cover"},
      {"unit-fraction-deficiency", Tier::kGating, "the deficiency of an extremal matrix is 1/m"},
      {"deficiency-multiples", Tier::kGating,
       "optimal cover entries of an extremal matrix are integer multiples of δ"},
      {"diagonal-extremality", Tier::kGating, "every extremal matrix is diagonally extremal"},
      {"licq", Tier::kReported,
       "hyperplanes saturated by an optimal polyplex have independent indicator vectors"},
      {"weight-one-coverage", Tier::kReported,
       "every index covered with weight 1 lies in the support of some optimal polyplex"},
      {"minor-polydiagonal", Tier::kReported, "A_α has a polydiagonal for every zero α of an extremal A"},
      {"polydiagonal-implies-diagonal", Tier::kReported,
       "a cover-defined matrix with a polydiagonal has a diagonal (tested on A_α)"},
      {"structural-checks", Tier::kTheorem, "necessary conditions on optimal covers hold"},
      {"dominated-minor-polydiagonal", Tier::kTheorem,
       "A_β has a polydiagonal for zeros β dominated by a (1-δ)-covered index"},
      {"big-deficiency", Tier::kTheorem, "deficiencies above 1/3 are 1 or 1/2 with permitted entries"},
      {"order-two-characterization", Tier::kTheorem,
       "order 2: extremal iff antipodal without a polydiagonal"},
      {"two-dimensional-characterization", Tier::kTheorem,
       "d = 2: extremal iff zeros form an s x t block with s + t = n + 1, and then δ = 1"},
      {"construction-soundness", Tier::kTheorem,
       "constructed matrices are extremal, diagonally extremal, with the predicted unique cover"},
      {"fixture-reproduction", Tier::kTheorem, "fixture δ and Λ are reproduced by the solver"},
      {"random-flip-maximality", Tier::kTheorem, "greedy maximal matrices without polydiagonals are extremal"},
  };
  return catalog;
}

inline const CheckInfo& check_info(std::string_view slug) {
  for (const CheckInfo& c : check_catalog())
    if (c.slug == slug) return c;
  throw PreconditionError("unknown check '" + std::string(slug) + "'");
}

struct Witness {
  std::string check;
  std::string stem;
  std::string source;
  std::string detail;
  BinaryTensor tensor;
  std::optional<CoverTable> cover;
};

struct Tally {
  CheckInfo info;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<std::size_t> witnesses;

  std::size_t failed() const { return checked - passed; }
};

struct SweepSummary {
  std::string label;
  std::size_t candidates = 0;
  std::size_t extremal = 0;
  std::size_t new_classes = 0;
  std::map<Rational, std::size_t> deficiencies;
};

struct ClassRecord {
  std::string source;
  /// "appendix", "construction: <route>", "base: order 1", or "unaccounted".
  std::string accounting;
  std::size_t d = 0;
  std::size_t n = 0;
  Rational delta;
};

struct ConjectureReport {
  std::vector<SweepSummary> sweeps;
  std::vector<ClassRecord> classes;
  std::vector<Tally> tallies;
  std::vector<Witness> witnesses;

  const Tally& tally(std::string_view slug) const {
    for (const Tally& t : tallies)
      if (t.info.slug == slug) return t;
    throw PreconditionError("unknown check '" + std::string(slug) + "'");
  }

  bool gating_passed() const {
    return std::all_of(tallies.begin(), tallies.end(),
                       [](const Tally& t) { return t.info.tier != Tier::kGating || t.failed() == 0; });
  }

  bool theorems_passed() const {
    return std::all_of(tallies.begin(), tallies.end(),
                       [](const Tally& t) { return t.info.tier != Tier::kTheorem || t.failed() == 0; });
  }

  std::size_t count_accounting(std::string_view prefix) const {
    return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [&](const ClassRecord& c) {
      return c.accounting.compare(0, prefix.size(), prefix) == 0;
    }));
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "conjecture harness report\n";
    out << "sweeps: " << sweeps.size() << '\n';
    for (const SweepSummary& s : sweeps) {
      out << "  " << s.label << ": " << s.candidates << " candidates, " << s.extremal << " extremal, "
          << s.new_classes << " new classes";
      if (!s.deficiencies.empty()) {
        out << ", δ:";
        for (const auto& [delta, count] : s.deficiencies) out << ' ' << polyplex::to_string(delta) << " x" << count;
      }
      out << '\n';
    }
    out << "extremal classes: " << classes.size() << " (appendix " << count_accounting("appendix")
        << ", construction " << count_accounting("construction") << ", base " << count_accounting("base")
        << ", unaccounted "
        << count_accounting("unaccounted") << ")\n";
    out << "checks:\n";
    for (const Tally& t : tallies) {
      const char* tier = t.info.tier == Tier::kGating ? "gating" : t.info.tier == Tier::kReported ? "reported" : "theorem";
      out << "  [" << tier << "] " << t.info.slug << ": " << t.checked << " checked, " << t.passed
          << " passed, " << t.failed() << " failed\n";
    }
    const std::size_t unaccounted = count_accounting("unaccounted");
    if (unaccounted > 0) {
      out << "unaccounted classes:\n";
      for (const ClassRecord& c : classes)
        if (c.accounting == "unaccounted")
          out << "  d=" << c.d << " n=" << c.n << " δ=" << polyplex::to_string(c.delta) << " from " << c.source << '\n';
    }
    if (!witnesses.empty()) {
      out << "counterexamples:\n";
      for (const Witness& w : witnesses)
        out << "  " << w.stem << ": " << w.check << " on " << w.source << " (" << w.detail << ")\n";
    }
    out << "verdict: " << (gating_passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

  /// Writes <stem>.tensor (and <stem>.cover when a cover is part of the
  /// witness) for every counterexample. Returns the written paths.
  std::vector<std::string> write_witnesses(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (const Witness& w : witnesses) {
      std::string text = "# check " + w.check + "\n# source " + w.source + "\n# detail " + w.detail + "\n";
      text += io::format_tensor(w.tensor);
      const std::string base = dir + "/" + w.stem;
      io::write_file(base + ".tensor", text);
      paths.push_back(base + ".tensor");
      if (w.cover) {
        io::write_file(base + ".cover", "# check " + w.check + "\n" + io::format_cover(*w.cover));
        paths.push_back(base + ".cover");
      }
    }
    return paths;
  }
};

/// Shared data for the per-matrix checks of an extremal matrix.
struct ExtremalAnalysis {
  BinaryTensor tensor;
  Rational delta;
  CoverTable cover;
  Polyplex polyplex;
  std::vector<Index> support;
  lp::Problem polyplex_problem;
};

/// Nullopt unless `a` is extremal. A supplied cover must be optimal for `a`;
/// otherwise the solver's vertex cover is used.
inline std::optional<ExtremalAnalysis> analyze_extremal(const BinaryTensor& a,
                                                        const std::optional<CoverTable>& cover = std::nullopt) {
  const ExtremalityVerdict v = is_extremal(a);
  if (!v.is_extremal) return std::nullopt;
  const detail::PolyplexLp lp = detail::solve_polyplex_lp(a);
  ExtremalAnalysis an{a, v.deficiency, detail::cover_from(a, lp), detail::polyplex_from(a, lp), lp.support,
                      detail::polyplex_problem(a, lp.support)};
  if (cover) {
    detail::require_optimal_cover(a, *cover, v.deficiency);
    an.cover = *cover;
  }
  return an;
}

/// Outcome of one check on one matrix. A failing check may name a different
/// matrix (with its cover) as the witness, e.g. a submatrix.
struct CheckResult {
  bool applicable = true;
  bool passed = true;
  std::string detail;
  std::optional<BinaryTensor> witness_tensor;
  std::optional<CoverTable> witness_cover;
};

namespace detail {

inline CheckResult fail(std::string detail) { return {true, false, std::move(detail), std::nullopt, std::nullopt}; }

inline std::string cover_text(const CoverTable& c) {
  std::string s;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < c.order(); ++j) s += (j ? " " : "") + polyplex::to_string(c(i, j));
  }
  return s;
}

/// Zeros form an s x t block with s + t = n + 1 and every other cell is 1.
inline bool is_konig_pattern(const BinaryTensor& a) {
  const std::size_t n = a.order();
  std::vector<bool> rows(n, false);
  std::vector<bool> cols(n, false);
  std::size_t zeros = 0;
  for (const Index& z : a.zeros()) {
    rows[static_cast<std::size_t>(z[0])] = true;
    cols[static_cast<std::size_t>(z[1])] = true;
    ++zeros;
  }
  const auto s = static_cast<std::size_t>(std::count(rows.begin(), rows.end(), true));
  const auto t = static_cast<std::size_t>(std::count(cols.begin(), cols.end(), true));
  return zeros == s * t && s + t == n + 1;
}

/// Checks that need an extremal matrix, by slug.
inline CheckResult run_extremal_check(std::string_view slug, const ExtremalAnalysis& an) {
  const BinaryTensor& a = an.tensor;
  const std::size_t n = a.order();
  if (slug == "unique-cover") {
    const UniquenessResult u = cover_is_unique(a);
    if (u.unique) return {};
    return fail("second optimal cover " + cover_text(*u.witness));
  }
  if (slug == "unit-fraction-deficiency") {
    if (boost::multiprecision::numerator(an.delta) == 1) return {};
    return fail("δ = " + polyplex::to_string(an.delta));
  }
  if (slug == "deficiency-multiples") {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational q = an.cover(i, j) / an.delta;
        if (boost::multiprecision::denominator(q) != 1)
          return fail("λ(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                      polyplex::to_string(an.cover(i, j)) + " with δ = " + polyplex::to_string(an.delta));
      }
    return {};
  }
  if (slug == "diagonal-extremality") {
    const DiagonalExtremality de = is_diagonally_extremal(a);
    if (de.diagonally_extremal) return {};
    return fail("A_α has no diagonal for α = " + de.failing_zero->to_string());
  }
  if (slug == "licq") {
    if (check_licq(a, an.polyplex, LicqSpace::kMatrixSupport)) return {};
    return fail("saturated hyperplanes are dependent for the solver's optimal polyplex");
  }
  if (slug == "weight-one-coverage") {
    std::optional<lp::Problem> face;
    for (std::size_t v = 0; v < an.support.size(); ++v) {
      if (cover_weight_at(an.cover, an.support[v]) != 1) continue;
      const auto it = an.polyplex.entries.find(an.support[v]);
      if (it != an.polyplex.entries.end() && it->second > 0) continue;
      if (!face) face = lp::optimal_face(an.polyplex_problem, lp::Goal::kMaximize);
      lp::Problem probe = *face;
      probe.objective.assign(probe.num_vars(), Rational(0));
      probe.objective[v] = 1;
      if (lp::solve(probe, lp::Goal::kMaximize).objective_value > 0) continue;
      return fail("index " + an.support[v].to_string() + " has weight 1 but is in no optimal polyplex");
    }
    return {};
  }
  if (slug == "minor-polydiagonal") {
    if (n < 2) return {false, true, "", std::nullopt, std::nullopt};
    for (const Index& z : a.zeros())
      if (!has_polydiagonal(delete_around(a, z))) return fail("A_α has no polydiagonal for α = " + z.to_string());
    return {};
  }
  if (slug == "polydiagonal-implies-diagonal") {
    CheckResult r{false, true, "", std::nullopt, std::nullopt};
    if (n < 2) return r;
    for (const Index& z : a.zeros()) {
      const BinaryTensor sub = delete_around(a, z);
      if (find_diagonal(sub)) {
        r.applicable = true;
        continue;
      }
      if (max_polyplex(sub).weight != static_cast<long>(n - 1)) continue;
      CheckResult f = fail("A_α has a polydiagonal but no diagonal for α = " + z.to_string());
      f.witness_tensor = sub;
      f.witness_cover = delete_weights(an.cover, z);
      return f;
    }
    return r;
  }
  if (slug == "structural-checks") {
    const StructuralReport s = structural_checks(a, an.cover, an.delta);
    for (const CheckOutcome& c : s.checks)
      if (c.applicable && !c.passed) return fail(c.name + ": " + c.detail);
    return {};
  }
  if (slug == "dominated-minor-polydiagonal") {
    const MinorPolydiagonalReport m = check_minor_polydiagonal(a, an.cover, an.delta);
    for (const MinorCheck& c : m.checks)
      if (!c.passed) return fail("A_β has no polydiagonal for β = " + c.beta.to_string());
    return {};
  }
  if (slug == "big-deficiency") {
    const BigDeficiencyReport b = classify_big_deficiency(an.delta, an.cover);
    if (b.deficiency_allowed && b.entries_allowed) return {};
    return fail(b.detail);
  }
  throw PreconditionError("'" + std::string(slug) + "' is not a per-matrix check");
}

inline const std::vector<std::string>& extremal_check_slugs() {
  static const std::vector<std::string> slugs = {
      "unique-cover",        "unit-fraction-deficiency",      "deficiency-multiples",
      "diagonal-extremality", "licq",                         "weight-one-coverage",
      "minor-polydiagonal",  "polydiagonal-implies-diagonal", "structural-checks",
      "dominated-minor-polydiagonal", "big-deficiency"};
  return slugs;
}

}  // namespace detail

/// Evaluates one check on a standalone matrix, as done when re-verifying a
/// witness file. `applicable` is false when the check's hypothesis fails.
inline CheckResult evaluate_check(std::string_view slug, const BinaryTensor& a,
                                  const std::optional<CoverTable>& cover = std::nullopt) {
  check_info(slug);
  if (slug == "polydiagonal-implies-diagonal") {
    if (!cover) return {false, true, "needs the defining cover", std::nullopt, std::nullopt};
    if (induced_matrix(*cover) != a) return {false, true, "A is not A(Λ)", std::nullopt, std::nullopt};
    if (find_diagonal(a)) return {};
    if (!has_polydiagonal(a)) return {false, true, "no polydiagonal", std::nullopt, std::nullopt};
    return detail::fail("polydiagonal without a diagonal");
  }
  if (slug == "order-two-characterization") {
    if (a.order() != 2) return {false, true, "order is not 2", std::nullopt, std::nullopt};
    const bool extremal = is_extremal(a).is_extremal;
    const bool predicted = is_antipodal(a) && !has_polydiagonal(a);
    if (extremal == predicted) return {};
    return detail::fail(extremal ? "extremal but not an antipodal matrix without polydiagonal"
                                 : "antipodal without polydiagonal but not extremal");
  }
  if (slug == "two-dimensional-characterization") {
    if (a.dim() != 2) return {false, true, "dimension is not 2", std::nullopt, std::nullopt};
    const ExtremalityVerdict v = is_extremal(a);
    const bool pattern = detail::is_konig_pattern(a);
    if (v.is_extremal != pattern) return detail::fail(v.is_extremal ? "extremal without the block pattern" : "block pattern but not extremal");
    if (v.is_extremal && v.deficiency != 1) return detail::fail("δ = " + to_string(v.deficiency));
    return {};
  }
  if (slug == "construction-soundness" || slug == "fixture-reproduction") {
    if (!cover) return {false, true, "needs the predicted cover", std::nullopt, std::nullopt};
    const Rational predicted = Rational(static_cast<long>(a.order())) - cover->weight();
    const ExtremalityVerdict v = is_extremal(a);
    if (!v.is_extremal) return detail::fail("not extremal");
    if (v.deficiency != predicted)
      return detail::fail("δ = " + to_string(v.deficiency) + ", predicted " + to_string(predicted));
    const CoverTable found = min_cover(a).cover;
    if (slug == "fixture-reproduction") {
      if (found.sorted_rows() != cover->sorted_rows()) return detail::fail("cover differs: " + detail::cover_text(found));
      return {};
    }
    if (found != *cover) return detail::fail("cover differs: " + detail::cover_text(found));
    if (!is_diagonally_extremal(a).diagonally_extremal) return detail::fail("not diagonally extremal");
    if (!cover_is_unique(a).unique) return detail::fail("optimal cover is not unique");
    return {};
  }
  if (slug == "random-flip-maximality") {
    if (is_extremal(a).is_extremal) return {};
    return detail::fail("not extremal");
  }
  const auto an = analyze_extremal(a, cover);
  if (!an) return {false, true, "not extremal", std::nullopt, std::nullopt};
  return detail::run_extremal_check(slug, *an);
}

/// Reads <stem>.tensor and, if present, <stem>.cover.
inline Witness load_witness(const std::string& tensor_path) {
  const std::string text = io::read_file(tensor_path);
  Witness w;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("# check ", 0) == 0) w.check = line.substr(8);
    else if (line.rfind("# source ", 0) == 0) w.source = line.substr(9);
    else if (line.rfind("# detail ", 0) == 0) w.detail = line.substr(9);
  }
  if (w.check.empty()) throw DomainError("witness " + tensor_path + " names no check");
  check_info(w.check);
  w.tensor = io::parse_tensor(text);
  std::filesystem::path p(tensor_path);
  w.stem = p.stem().string();
  const std::filesystem::path cover_path = p.replace_extension(".cover");
  if (std::filesystem::exists(cover_path)) w.cover = io::parse_cover(io::read_file(cover_path.string()));
  return w;
}

/// True iff the witness still refutes its check.
inline bool verify_witness(const Witness& w) {
  const CheckResult r = evaluate_check(w.check, w.tensor, w.cover);
  return r.applicable && !r.passed;
}

namespace detail {

inline BinaryTensor class_key(const BinaryTensor& a) {
  if (group_order(a.dim(), a.order()) > kDefaultCanonicalGuard) return a;
  return canonical_form(a);
}

/// How `an` arises from a smaller extremal matrix by one construction step,
/// if it does.
inline std::optional<std::string> construction_route(const ExtremalAnalysis& an) {
  const BinaryTensor& a = an.tensor;
  const std::size_t d = a.dim();
  const std::size_t n = a.order();
  const Rational& delta = an.delta;

  if (d >= 3) {
    for (std::size_t i = 0; i < d; ++i) {
      const BinaryTensor first = slice(a, {i, 0});
      bool same = true;
      for (std::size_t j = 1; j < n && same; ++j) same = slice(a, {i, static_cast<int>(j)}) == first;
      if (!same) continue;
      const ExtremalityVerdict v = is_extremal(first);
      if (v.is_extremal && v.deficiency == delta) return "dimension lift";
    }
  }

  if (n >= 2) {
    // The attached hyperplanes may sit at a different position in each
    // direction, so every choice of one column per row is tried.
    Index cols(d);
    do {
      std::vector<Rational> column(d);
      std::vector<std::vector<Rational>> rows = an.cover.rows();
      for (std::size_t i = 0; i < d; ++i) {
        const auto c = static_cast<std::size_t>(cols[i]);
        column[i] = rows[i][c];
        rows[i].erase(rows[i].begin() + static_cast<std::ptrdiff_t>(c));
      }
      const CoverTable smaller(std::move(rows));
      std::vector<std::size_t> nonzero;
      for (std::size_t i = 0; i < d; ++i)
        if (column[i] != 0) nonzero.push_back(i);
      std::optional<std::string> clause;
      if (nonzero.size() == 1 && column[nonzero[0]] == 1) clause = "attach one";
      if (!clause && nonzero.size() == 2) {
        for (int k = 0; k < 2 && !clause; ++k) {
          const std::size_t big = nonzero[static_cast<std::size_t>(k)];
          const std::size_t small = nonzero[static_cast<std::size_t>(1 - k)];
          const auto& row = smaller.row(small);
          if (column[big] == Rational(1) - delta && column[small] == delta &&
              std::find(row.begin(), row.end(), delta) != row.end())
            clause = "attach split";
        }
      }
      if (!clause) {
        Index alpha(d);
        do {
          bool match = true;
          for (std::size_t i = 0; i < d && match; ++i)
            match = smaller(i, static_cast<std::size_t>(alpha[i])) == column[i];
          if (match && cover_weight_at(smaller, alpha) == 1) clause = "duplicate index";
        } while (!clause && next_index(alpha, n - 1));
      }
      if (!clause) continue;
      const ExtremalityVerdict v = is_extremal(induced_matrix(smaller));
      if (v.is_extremal && v.deficiency == delta &&
          smaller.weight() == Rational(static_cast<long>(n - 1)) - delta)
        return "order growth (" + *clause + ")";
    } while (next_index(cols, n));
  }

  if (n == 2 && d >= 3) {
    for (std::size_t s = 0; s < d; ++s) {
      const std::size_t col = an.cover(s, 0) != 0 ? 0 : 1;
      if (an.cover(s, col) != delta || an.cover(s, 1 - col) != 0) continue;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == s || an.cover(r, 1 - col) != 0) continue;
        std::vector<std::vector<Rational>> rows = an.cover.rows();
        rows[r][col] += delta;
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(s));
        const CoverTable smaller(std::move(rows));
        const std::size_t r_small = r < s ? r : r - 1;
        try {
          split_essential_weight(smaller, delta, r_small);
        } catch (const PreconditionError&) {
          continue;
        }
        const ExtremalityVerdict v = is_extremal(induced_matrix(smaller));
        if (v.is_extremal && v.deficiency == delta && smaller.weight() == Rational(2) - delta)
          return "order-2 split";
      }
    }
  }
  return std::nullopt;
}

class HarnessRun {
 public:
  explicit HarnessRun(const HarnessConfig& cfg) : cfg_(cfg) {
    for (const CheckInfo& c : check_catalog()) report_.tallies.push_back({c, 0, 0, {}});
  }

  ConjectureReport run() {
    validate_guards();
    if (cfg_.fixtures || cfg_.constructions || !cfg_.sweeps.empty()) load_appendix();
    if (cfg_.fixtures) run_fixtures();
    if (cfg_.constructions) run_constructions();
    for (const SweepConfig& s : cfg_.sweeps) run_sweep(s);
    return std::move(report_);
  }

 private:
  void validate_guards() const {
    for (const SweepConfig& s : cfg_.sweeps) {
      for (std::size_t d = s.d_range.lo; d <= s.d_range.hi; ++d) {
        if (s.mode == SweepMode::kAntipodalOrder2) {
          if (d < 2 || d > 6) throw PreconditionError("antipodal sweeps need 2 <= d <= 6");
          if (d <= 5 && (std::size_t{1} << (std::size_t{1} << (d - 1))) > s.guard)
            throw GuardError("antipodal sweep for d=" + std::to_string(d) + " exceeds the guard");
          continue;
        }
        for (std::size_t n = s.n_range.lo; n <= s.n_range.hi; ++n) {
          if (d < 2 || n < 1) throw PreconditionError("sweeps need d >= 2 and n >= 1");
          checked_cell_count(d, n);
          if (s.mode == SweepMode::kSteppedExhaustive) {
            const std::size_t total = count_stepped(d, n, s.guard);
            if (total > s.guard)
              throw GuardError("stepped sweep for d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                               " has " + std::to_string(total) + " candidates, above the guard of " +
                               std::to_string(s.guard));
          } else if (s.samples > s.guard) {
            throw GuardError("random sweep sample count exceeds the guard");
          }
        }
      }
    }
  }

  Tally& tally(std::string_view slug) {
    for (Tally& t : report_.tallies)
      if (t.info.slug == slug) return t;
    throw PreconditionError("unknown check");
  }

  void record(std::string_view slug, const CheckResult& r, const std::string& source, const BinaryTensor& a,
              const std::optional<CoverTable>& cover) {
    if (!r.applicable) return;
    Tally& t = tally(slug);
    ++t.checked;
    if (r.passed) {
      ++t.passed;
      return;
    }
    Witness w;
    w.check = std::string(slug);
    w.stem = w.check + "-" + std::to_string(t.witnesses.size() + 1);
    w.source = source;
    w.detail = r.detail;
    w.tensor = r.witness_tensor.value_or(a);
    w.cover = r.witness_tensor ? r.witness_cover : cover;
    t.witnesses.push_back(report_.witnesses.size());
    report_.witnesses.push_back(std::move(w));
  }

  void load_appendix() {
    fixtures_ = load_fixtures(cfg_.fixture_dir);
    for (const Fixture& f : fixtures_)
      if (f.role == "core" && f.tensor) appendix_.emplace(class_key(*f.tensor), f.name);
  }

  /// Registers an extremal matrix; evaluates it when its class is new.
  /// Returns true for a new class.
  bool add_extremal(const BinaryTensor& a, const std::string& source, std::optional<std::string> accounting) {
    BinaryTensor key = class_key(a);
    if (seen_.count(key)) return false;
    seen_.insert(key);
    const auto an = analyze_extremal(a);
    if (!an) throw std::logic_error("add_extremal called on a non-extremal matrix");
    if (!accounting) {
      if (const auto it = appendix_.find(key); it != appendix_.end())
        accounting = "appendix";
      else if (a.order() == 1)
        accounting = "base: order 1";
      else if (const auto route = construction_route(*an))
        accounting = "construction: " + *route;
      else
        accounting = "unaccounted";
    }
    report_.classes.push_back({source, *accounting, a.dim(), a.order(), an->delta});
    for (const std::string& slug : extremal_check_slugs())
      record(slug, run_extremal_check(slug, *an), source, a, an->cover);
    return true;
  }

  void run_fixtures() {
    SweepSummary summary{"fixtures", 0, 0, 0, {}};
    for (const Fixture& f : fixtures_) {
      if (!f.tensor) continue;
      ++summary.candidates;
      if (f.cover && f.delta)
        record("fixture-reproduction", evaluate_check("fixture-reproduction", *f.tensor, f.cover),
               "fixture " + f.name, *f.tensor, f.cover);
      const ExtremalityVerdict v = is_extremal(*f.tensor);
      if (!v.is_extremal) continue;
      ++summary.extremal;
      ++summary.deficiencies[v.deficiency];
      const bool core = f.role == "core";
      if (add_extremal(*f.tensor, "fixture " + f.name, core ? std::optional<std::string>("appendix") : std::nullopt))
        ++summary.new_classes;
    }
    report_.sweeps.push_back(std::move(summary));
  }

  void run_constructions() {
    SweepSummary summary{"constructions", 0, 0, 0, {}};
    for (const ConstructedMatrix& m : construction_corpus(fixtures_, cfg_.construction_limit)) {
      ++summary.candidates;
      const CheckResult r = evaluate_check("construction-soundness", m.tensor, m.cover);
      record("construction-soundness", r, m.label, m.tensor, m.cover);
      if (!r.passed) continue;
      ++summary.extremal;
      ++summary.deficiencies[m.delta];
      if (add_extremal(m.tensor, m.label, "construction: " + m.kind)) ++summary.new_classes;
    }
    report_.sweeps.push_back(std::move(summary));
  }

  void candidate(SweepSummary& summary, const BinaryTensor& a, const std::string& label, bool from_random) {
    ++summary.candidates;
    if (a.order() == 2)
      record("order-two-characterization", evaluate_check("order-two-characterization", a), label, a, std::nullopt);
    if (a.dim() == 2)
      record("two-dimensional-characterization", evaluate_check("two-dimensional-characterization", a), label, a,
             std::nullopt);
    const ExtremalityVerdict v = is_extremal(a);
    if (from_random) record("random-flip-maximality", v.is_extremal ? CheckResult{} : fail("not extremal"), label, a, std::nullopt);
    if (!v.is_extremal) return;
    ++summary.extremal;
    ++summary.deficiencies[v.deficiency];
    if (add_extremal(a, label, std::nullopt)) ++summary.new_classes;
  }

  static BinaryTensor random_maximal(std::size_t d, std::size_t n, std::mt19937_64& rng) {
    BinaryTensor a(d, n);
    std::vector<std::size_t> order(a.cell_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    for (std::size_t off : order) {
      a.set(off, true);
      if (has_polydiagonal(a)) a.set(off, false);
    }
    return a;
  }

  void run_sweep(const SweepConfig& s) {
    for (std::size_t d = s.d_range.lo; d <= s.d_range.hi; ++d) {
      if (s.mode == SweepMode::kAntipodalOrder2) {
        SweepSummary summary{"antipodal d=" + std::to_string(d), 0, 0, 0, {}};
        AntipodalOptions opt;
        opt.guard = s.guard;
        opt.samples = s.samples;
        opt.seed = s.seed;
        if (d >= 6) summary.label += " sampled (seed " + std::to_string(s.seed) + ")";
        enumerate_antipodal(d, [&](const BinaryTensor& a) { candidate(summary, a, summary.label, false); }, opt);
        report_.sweeps.push_back(std::move(summary));
        continue;
      }
      for (std::size_t n = s.n_range.lo; n <= s.n_range.hi; ++n) {
        const std::string shape = "d=" + std::to_string(d) + " n=" + std::to_string(n);
        if (s.mode == SweepMode::kSteppedExhaustive) {
          SweepSummary summary{"stepped " + shape, 0, 0, 0, {}};
          enumerate_stepped(d, n, [&](const BinaryTensor& a) { candidate(summary, a, summary.label, false); },
                            s.guard);
          report_.sweeps.push_back(std::move(summary));
        } else {
          SweepSummary summary{"random " + shape + " (seed " + std::to_string(s.seed) + ")", 0, 0, 0, {}};
          std::seed_seq seq{s.seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n)};
          std::mt19937_64 rng(seq);
          for (std::size_t k = 0; k < s.samples; ++k)
            candidate(summary, random_maximal(d, n, rng), summary.label, true);
          report_.sweeps.push_back(std::move(summary));
        }
      }
    }
  }

  const HarnessConfig& cfg_;
  ConjectureReport report_;
  std::vector<Fixture> fixtures_;
  std::map<BinaryTensor, std::string> appendix_;
  std::set<BinaryTensor> seen_;
};

}  // namespace detail

inline ConjectureReport run_conjecture_harness(const HarnessConfig& cfg) {
  return detail::HarnessRun(cfg).run();
}

inline ConjectureReport run_conjecture_harness(const SweepConfig& cfg) {
  HarnessConfig h;
  h.sweeps.push_back(cfg);
  return run_conjecture_harness(h);
}

/// Fixtures, the construction corpus, and every exhaustive sweep that fits
/// the default guard, plus a small random-flip safety net.
inline HarnessConfig full_corpus_config(std::uint64_t seed = 1) {
  HarnessConfig h;
  h.fixtures = true;
  h.constructions = true;
  auto stepped = [&](std::size_t d_lo, std::size_t d_hi, std::size_t n_lo, std::size_t n_hi) {
    SweepConfig s;
    s.mode = SweepMode::kSteppedExhaustive;
    s.d_range = {d_lo, d_hi};
    s.n_range = {n_lo, n_hi};
    s.seed = seed;
    h.sweeps.push_back(s);
  };
  stepped(2, 2, 1, 4);
  stepped(3, 3, 1, 4);
  stepped(4, 5, 2, 2);
  SweepConfig anti;
  anti.mode = SweepMode::kAntipodalOrder2;
  anti.d_range = {2, 5};
  anti.seed = seed;
  h.sweeps.push_back(anti);
  SweepConfig random;
  random.mode = SweepMode::kRandomFlips;
  random.d_range = {3, 4};
  random.n_range = {2, 3};
  random.samples = 8;
  random.seed = seed;
  h.sweeps.push_back(random);
  return h;
}

}  // namespace polyplex
