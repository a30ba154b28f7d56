// Command-line front end: decision procedures, constructions and the sweep
// harness over the text formats. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyplex/polyplex.hpp"

namespace {

using namespace polyplex;

constexpr int kDomainExit = 1;
constexpr int kUsageExit = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BinaryTensor load_tensor(const std::string& path) {
  try {
    return io::parse_tensor(io::read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  }
}

CoverTable load_cover(const std::string& path) {
  try {
    return io::parse_cover(io::read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  }
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9)
      throw UsageError(std::string("malformed ") + what + " '" + text + "'; expected e.g. 3,2,1");
    out.push_back(static_cast<std::size_t>(std::stoul(part)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

SizeRange parse_range(const std::string& text, const char* what) {
  const std::size_t dots = text.find("..");
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
      throw UsageError(std::string("malformed ") + what + " range '" + text + "'; expected N or LO..HI");
    return static_cast<std::size_t>(std::stoul(s));
  };
  if (dots == std::string::npos) {
    const std::size_t v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

Index parse_index(const std::string& text, std::size_t d, std::size_t n) {
  const auto coords = parse_list(text, "index");
  if (coords.size() != d) throw UsageError("index needs " + std::to_string(d) + " coordinates");
  Index idx(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords[i] < 1 || coords[i] > n) throw UsageError("index coordinates must lie in 1.." + std::to_string(n));
    idx[i] = static_cast<int>(coords[i]) - 1;
  }
  return idx;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_extremal_report(const BinaryTensor& a) {
  const ExtremalityVerdict v = is_extremal(a);
  if (v.has_polydiagonal) {
    std::cout << "not extremal: has polydiagonal\n";
    return;
  }
  if (!v.is_extremal) {
    std::cout << "not extremal: switching on " << v.failing_zero->to_string()
              << " leaves no polydiagonal\n";
    std::cout << "deficiency: " << to_string(v.deficiency) << '\n';
    return;
  }
  const CoverTable cover = min_cover(a).cover;
  std::cout << "extremal\n";
  std::cout << "deficiency: " << to_string(v.deficiency) << '\n';
  std::cout << "diagonally extremal: " << yes_no(is_diagonally_extremal(a).diagonally_extremal) << '\n';
  std::cout << "unique cover: " << yes_no(cover_is_unique(a).unique) << '\n';
  std::cout << "structural checks:\n";
  for (const CheckOutcome& c : structural_checks(a, cover, v.deficiency).checks) {
    std::cout << "  " << c.name << ": " << (!c.applicable ? "n/a" : c.passed ? "pass" : "FAIL");
    if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
    std::cout << '\n';
  }
  const BigDeficiencyReport big = classify_big_deficiency(v.deficiency, cover);
  std::cout << "big deficiency classification: "
            << (big.deficiency_allowed && big.entries_allowed ? "consistent" : "inconsistent");
  if (!big.detail.empty()) std::cout << " (" << big.detail << ')';
  std::cout << '\n';
  std::cout << io::format_cover(cover);
}

int verify_fixtures(const std::string& dir) {
  const std::vector<Fixture> fixtures = load_fixtures(dir);
  std::size_t failures = 0;
  std::size_t checked = 0;
  for (const Fixture& f : fixtures) {
    if (!f.tensor || !f.cover || !f.delta) {
      std::cout << f.name << ": checksum ok\n";
      continue;
    }
    ++checked;
    const Rational delta = deficiency(*f.tensor);
    const CoverTable cover = min_cover(*f.tensor).cover;
    const bool delta_ok = delta == *f.delta;
    const bool cover_ok = cover.sorted_rows() == f.cover->sorted_rows();
    std::cout << f.name << ": δ " << to_string(delta) << (delta_ok ? " ok" : " MISMATCH") << ", Λ "
              << (cover_ok ? "ok" : "MISMATCH") << '\n';
    if (!delta_ok || !cover_ok) ++failures;
  }
  std::cout << fixtures.size() << " fixtures loaded, " << checked << " re-derived, " << failures << " mismatches\n";
  return failures == 0 ? 0 : kDomainExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal 0/1 tensors without polydiagonals: exact LP tools and conjecture harness", "polyplex"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");

  std::string tensor_file;
  std::string cover_file;

  auto* solve_cmd = app.add_subcommand("solve", "Maximum polyplex weight and an optimal polyplex");
  solve_cmd->add_option("tensor", tensor_file, "Tensor file")->required();
  auto* cover_cmd = app.add_subcommand("cover", "Minimum cover weight and an optimal cover");
  cover_cmd->add_option("tensor", tensor_file, "Tensor file")->required();
  auto* deficiency_cmd = app.add_subcommand("deficiency", "n minus the maximum polyplex weight");
  deficiency_cmd->add_option("tensor", tensor_file, "Tensor file")->required();
  auto* extremal_cmd = app.add_subcommand("extremal", "Extremality verdict and structural report");
  extremal_cmd->add_option("tensor", tensor_file, "Tensor file")->required();
  auto* induce_cmd = app.add_subcommand("induce", "The tensor A(Λ) of indices covered with weight >= 1");
  induce_cmd->add_option("cover", cover_file, "Cover file")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build extremal matrices from smaller ones");
  construct_cmd->require_subcommand(1);
  auto* lift_cmd = construct_cmd->add_subcommand("lift", "Add a direction with identical hyperplanes");
  lift_cmd->add_option("tensor", tensor_file, "Tensor file")->required();

  std::string duplicate;
  std::size_t attach_row = 0;
  std::string split_rows;
  auto* grow_cmd = construct_cmd->add_subcommand("grow", "Attach a column to an optimal cover");
  grow_cmd->add_option("cover", cover_file, "Cover file")->required();
  auto* dup_opt = grow_cmd->add_option("--duplicate", duplicate, "Index covered with weight 1, e.g. 1,2,2");
  auto* one_opt = grow_cmd->add_option("--one", attach_row, "Row receiving the 1-entry (1-based)");
  auto* split_opt = grow_cmd->add_option("--split", split_rows, "BIG,DELTA rows for the 1-δ and δ entries");
  dup_opt->excludes(one_opt)->excludes(split_opt);
  one_opt->excludes(split_opt);

  auto* shrink_cmd = construct_cmd->add_subcommand("shrink", "Remove an attached unit column");
  shrink_cmd->add_option("cover", cover_file, "Cover file")->required();

  std::string parts;
  std::size_t young_m = 1;
  std::size_t young_d = 0;
  std::size_t young_n = 0;
  bool young_tensor = false;
  auto* young_cmd = construct_cmd->add_subcommand("young", "Two-value cover from a Young diagram");
  young_cmd->add_option("parts", parts, "Comma-separated parts, e.g. 3,2,1")->required();
  young_cmd->add_option("--m", young_m, "Entries equal 1/m")->required();
  young_cmd->add_option("--d", young_d, "Dimension")->required();
  young_cmd->add_option("--n", young_n, "Order")->required();
  young_cmd->add_flag("--tensor", young_tensor, "Print A(Λ) instead of Λ");

  std::string split_delta;
  std::size_t split_row = 0;
  auto* split_cmd = construct_cmd->add_subcommand("split", "Split an essential weight (order 2)");
  split_cmd->add_option("cover", cover_file, "Cover file")->required();
  split_cmd->add_option("--delta", split_delta, "Deficiency δ (default 2 - weight)");
  split_cmd->add_option("--row", split_row, "Row whose essential weight is split (1-based, default last)");

  std::string gr_r;
  std::string gr_s;
  auto* gr_cmd = app.add_subcommand("galeryser", "Does a 0/1 matrix with row sums r and column sums s exist");
  gr_cmd->add_option("r", gr_r, "Row sums, nonincreasing, comma-separated")->required();
  gr_cmd->add_option("s", gr_s, "Column sums, nonincreasing, comma-separated")->required();

  std::string sweep_d = "2..3";
  std::string sweep_n = "1..3";
  std::string sweep_mode = "stepped";
  std::uint64_t sweep_seed = 1;
  std::size_t sweep_samples = 16;
  bool sweep_fixtures = false;
  bool sweep_constructions = false;
  bool sweep_full = false;
  std::string witness_dir;
  std::string fixture_dir = kDefaultFixtureDir;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the conjecture harness");
  sweep_cmd->add_option("--d", sweep_d, "Dimension range, N or LO..HI")->capture_default_str();
  sweep_cmd->add_option("--n", sweep_n, "Order range, N or LO..HI")->capture_default_str();
  sweep_cmd->add_option("--mode", sweep_mode, "stepped, antipodal or random")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_seed, "Seed for sampled modes")->capture_default_str();
  sweep_cmd->add_option("--samples", sweep_samples, "Samples per shape for sampled modes")->capture_default_str();
  sweep_cmd->add_flag("--fixtures", sweep_fixtures, "Include the fixture corpus");
  sweep_cmd->add_flag("--constructions", sweep_constructions, "Include the construction corpus");
  sweep_cmd->add_flag("--full", sweep_full, "Full corpus: fixtures, constructions and all default sweeps");
  sweep_cmd->add_option("--witness-dir", witness_dir, "Write counterexample witnesses here");
  sweep_cmd->add_option("--fixture-dir", fixture_dir, "Fixture directory")->capture_default_str();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Fixture corpus operations");
  fixtures_cmd->require_subcommand(1);
  auto* fixtures_verify = fixtures_cmd->add_subcommand("verify", "Checksums, then δ and Λ re-derivation");
  fixtures_verify->add_option("--dir", fixture_dir, "Fixture directory")->capture_default_str();

  std::string witness_file;
  auto* witness_cmd = app.add_subcommand("witness", "Re-verify a counterexample witness file");
  witness_cmd->add_option("file", witness_file, "Witness .tensor file")->required();

  if (argc > 1 && argv[1][0] != '-') {
    const std::string verb = argv[1];
    const auto subs = app.get_subcommands([&](const CLI::App* s) { return s->get_name() == verb; });
    if (subs.empty()) {
      std::cerr << "error: unknown command '" << verb << "'\n\n" << app.help();
      return kUsageExit;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageExit;
  }

  try {
    if (*solve_cmd) {
      const PolyplexResult r = max_polyplex(load_tensor(tensor_file));
      std::cout << "weight " << to_string(r.weight) << '\n' << io::format_polyplex(r.polyplex);
    } else if (*cover_cmd) {
      const CoverResult r = min_cover(load_tensor(tensor_file));
      std::cout << "weight " << to_string(r.weight) << '\n' << io::format_cover(r.cover);
    } else if (*deficiency_cmd) {
      std::cout << to_string(deficiency(load_tensor(tensor_file))) << '\n';
    } else if (*extremal_cmd) {
      print_extremal_report(load_tensor(tensor_file));
    } else if (*induce_cmd) {
      std::cout << io::format_tensor(induced_matrix(load_cover(cover_file)));
    } else if (*lift_cmd) {
      std::cout << io::format_tensor(lift_dimension(load_tensor(tensor_file)));
    } else if (*grow_cmd) {
      const CoverTable cover = load_cover(cover_file);
      GrowVariant variant;
      if (*dup_opt) {
        variant = DuplicateIndex{parse_index(duplicate, cover.dim(), cover.order())};
      } else if (*one_opt) {
        if (attach_row < 1) throw UsageError("--one rows are 1-based");
        variant = AttachOne{attach_row - 1};
      } else if (*split_opt) {
        const auto rows = parse_list(split_rows, "row pair");
        if (rows.size() != 2 || rows[0] < 1 || rows[1] < 1) throw UsageError("--split needs BIG,DELTA (1-based)");
        variant = AttachSplit{rows[0] - 1, rows[1] - 1};
      } else {
        throw UsageError("grow needs one of --duplicate, --one, --split");
      }
      std::cout << io::format_cover(grow_order(cover, variant));
    } else if (*shrink_cmd) {
      const auto smaller = shrink_order(load_cover(cover_file));
      if (!smaller) throw DomainError("no column with a single 1-entry and zeros elsewhere");
      std::cout << io::format_cover(*smaller);
    } else if (*young_cmd) {
      const YoungDiagram y{parse_list(parts, "Young diagram")};
      const CoverTable cover = two_value_cover(y, young_m, young_d, young_n);
      std::cout << (young_tensor ? io::format_tensor(induced_matrix(cover)) : io::format_cover(cover));
    } else if (*split_cmd) {
      const CoverTable cover = load_cover(cover_file);
      const Rational delta = split_delta.empty() ? Rational(static_cast<long>(cover.order())) - cover.weight()
                                                 : parse_rational(split_delta);
      std::optional<std::size_t> row;
      if (split_row > 0) row = split_row - 1;
      std::cout << io::format_cover(split_essential_weight(cover, delta, row));
    } else if (*gr_cmd) {
      std::cout << yes_no(gale_ryser_exists(parse_list(gr_r, "degree sequence"), parse_list(gr_s, "degree sequence")))
                << '\n';
    } else if (*sweep_cmd) {
      HarnessConfig cfg;
      const std::size_t guard = guard_from_env(kDefaultEnumerationGuard);
      if (sweep_full) {
        cfg = full_corpus_config(sweep_seed);
        for (auto& s : cfg.sweeps) s.guard = guard;
      } else {
        SweepConfig s;
        try {
          s.mode = parse_sweep_mode(sweep_mode);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
        s.d_range = parse_range(sweep_d, "--d");
        s.n_range = parse_range(sweep_n, "--n");
        s.seed = sweep_seed;
        s.samples = sweep_samples;
        s.guard = guard;
        cfg.sweeps.push_back(s);
        cfg.fixtures = sweep_fixtures;
        cfg.constructions = sweep_constructions;
      }
      cfg.fixture_dir = fixture_dir;
      const ConjectureReport report = run_conjecture_harness(cfg);
      std::cout << report.to_text();
      if (!witness_dir.empty())
        for (const std::string& path : report.write_witnesses(witness_dir)) std::cerr << "wrote " << path << '\n';
      if (!report.gating_passed()) return kDomainExit;
    } else if (*fixtures_verify) {
      return verify_fixtures(fixture_dir);
    } else if (*witness_cmd) {
      const Witness w = load_witness(witness_file);
      const bool still = verify_witness(w);
      std::cout << w.check << ": " << (still ? "counterexample confirmed" : "not a counterexample") << '\n';
      return still ? 0 : kDomainExit;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainExit;
  }
  return 0;
}
