#pragma once

// The fixture corpus: published extremal matrices with their optimal covers,
// locked by content checksums listed in MANIFEST.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyplex/cover_table.hpp"
#include "polyplex/error.hpp"
#include "polyplex/io.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex {

#ifdef POLYPLEX_FIXTURE_DIR
inline constexpr const char* kDefaultFixtureDir = POLYPLEX_FIXTURE_DIR;
#else
inline constexpr const char* kDefaultFixtureDir = "data/fixtures";
#endif

struct Fixture {
  std::string name;
  /// "core" for the appendix list, "auxiliary" for the supporting examples.
  std::string role;
  std::optional<Rational> delta;
  std::optional<BinaryTensor> tensor;
  std::optional<CoverTable> cover;
};

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Reads MANIFEST in `dir` and every file it names. Throws DomainError when a
/// checksum does not match.
inline std::vector<Fixture> load_fixtures(const std::string& dir = kDefaultFixtureDir) {
  const std::string manifest = io::read_file(dir + "/MANIFEST");
  std::vector<Fixture> out;
  for (const auto& line : io::tokenize(manifest)) {
    if (line.size() != 6)
      throw ParseError("MANIFEST lines need 6 fields", line.front().line, line.front().column);
    Fixture f;
    f.name = line[0].text;
    f.role = line[1].text;
    if (f.role != "core" && f.role != "auxiliary")
      throw ParseError("role must be core or auxiliary", line[1].line, line[1].column);
    if (line[2].text != "-") f.delta = io::detail::parse_rational_token(line[2]);
    std::string tensor_text;
    std::string cover_text;
    if (line[3].text != "-") tensor_text = io::read_file(dir + "/" + line[3].text);
    if (line[4].text != "-") cover_text = io::read_file(dir + "/" + line[4].text);
    const std::string sum = hex64(fnv1a64(cover_text, fnv1a64(tensor_text)));
    if (sum != line[5].text)
      throw DomainError("checksum mismatch for fixture " + f.name + ": expected " + line[5].text +
                        ", computed " + sum);
    if (!tensor_text.empty()) f.tensor = io::parse_tensor(tensor_text);
    if (!cover_text.empty()) f.cover = io::parse_cover(cover_text);
    out.push_back(std::move(f));
  }
  return out;
}

inline const Fixture& find_fixture(const std::vector<Fixture>& fixtures, std::string_view name) {
  for (const Fixture& f : fixtures)
    if (f.name == name) return f;
  throw DomainError("no fixture named " + std::string(name));
}

}  // namespace polyplex
