#pragma once

// Text formats for tensors, covers and polyplexes.
//
//   tensor <d> <n>      then n^d values in {0,1}, coordinate d fastest
//   cover <d> <n>       then d lines of n rationals (p/q or p)
//   polyplex <d> <n>    then one line `<i1> ... <id> <p>/<q>` per nonzero entry
//
// Coordinates are 1-based. Lines whose first non-blank character is `#` are
// comments.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyplex/cover_table.hpp"
#include "polyplex/error.hpp"
#include "polyplex/matching.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"

namespace polyplex::io {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Non-comment lines, each split into tokens with 1-based positions.
inline std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      if (tokens.empty() && line[i] == '#') break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      tokens.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

namespace detail {

inline std::size_t parse_count(const Token& t, const char* what, std::size_t lo, std::size_t hi) {
  std::size_t value = 0;
  if (t.text.empty() || t.text.size() > 9) throw ParseError(std::string("bad ") + what, t.line, t.column);
  for (char c : t.text) {
    if (c < '0' || c > '9')
      throw ParseError(std::string("expected an integer ") + what + ", got '" + t.text + "'", t.line,
                       t.column);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  if (value < lo || value > hi)
    throw ParseError(std::string(what) + " " + t.text + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]",
                     t.line, t.column);
  return value;
}

struct Header {
  std::size_t d;
  std::size_t n;
};

inline Header parse_header(const std::vector<std::vector<Token>>& lines, const char* keyword) {
  if (lines.empty()) throw ParseError(std::string("empty input; expected '") + keyword + " <d> <n>'", 0, 0);
  const auto& h = lines.front();
  if (h[0].text != keyword)
    throw ParseError(std::string("expected '") + keyword + "', got '" + h[0].text + "'", h[0].line,
                     h[0].column);
  if (h.size() != 3)
    throw ParseError(std::string("header must be '") + keyword + " <d> <n>'", h[0].line, h[0].column);
  Header out{parse_count(h[1], "dimension", 1, kMaxDim), parse_count(h[2], "order", 1, 64)};
  return out;
}

inline Rational parse_rational_token(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), t.line, t.column);
  }
}

}  // namespace detail

inline BinaryTensor parse_tensor(std::string_view text) {
  const auto lines = tokenize(text);
  const auto [d, n] = detail::parse_header(lines, "tensor");
  if (d < 2) throw ParseError("tensor dimension must be at least 2", lines[0][1].line, lines[0][1].column);
  const std::size_t cells = checked_cell_count(d, n);
  std::vector<std::uint8_t> bits;
  bits.reserve(cells);
  const Token* last = &lines[0].back();
  for (std::size_t l = 1; l < lines.size(); ++l) {
    for (const Token& t : lines[l]) {
      if (t.text != "0" && t.text != "1")
        throw ParseError("tensor values must be 0 or 1, got '" + t.text + "'", t.line, t.column);
      if (bits.size() == cells)
        throw ParseError("more than n^d = " + std::to_string(cells) + " values", t.line, t.column);
      bits.push_back(t.text == "1" ? 1 : 0);
      last = &t;
    }
  }
  if (bits.size() != cells)
    throw ParseError("expected " + std::to_string(cells) + " values, found " +
                         std::to_string(bits.size()),
                     last->line, last->column);
  return BinaryTensor(d, n, std::move(bits));
}

inline CoverTable parse_cover(std::string_view text) {
  const auto lines = tokenize(text);
  const auto [d, n] = detail::parse_header(lines, "cover");
  if (lines.size() != d + 1) {
    const Token& t = lines.back().front();
    throw ParseError("expected " + std::to_string(d) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     t.line, t.column);
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t l = 1; l <= d; ++l) {
    const auto& line = lines[l];
    if (line.size() != n)
      throw ParseError("expected " + std::to_string(n) + " entries in row, found " +
                           std::to_string(line.size()),
                       line.front().line, line.front().column);
    std::vector<Rational> row;
    for (const Token& t : line) {
      Rational v = detail::parse_rational_token(t);
      if (v < 0) throw ParseError("cover entries must be nonnegative", t.line, t.column);
      row.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  return CoverTable(std::move(rows));
}

inline Polyplex parse_polyplex(std::string_view text) {
  const auto lines = tokenize(text);
  const auto [d, n] = detail::parse_header(lines, "polyplex");
  Polyplex k{d, n, {}};
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& line = lines[l];
    if (line.size() != d + 1)
      throw ParseError("expected " + std::to_string(d) + " coordinates and a value",
                       line.front().line, line.front().column);
    Index idx(d);
    for (std::size_t i = 0; i < d; ++i)
      idx[i] = static_cast<int>(detail::parse_count(line[i], "coordinate", 1, n)) - 1;
    Rational v = detail::parse_rational_token(line[d]);
    if (v <= 0) throw ParseError("polyplex entries must be positive", line[d].line, line[d].column);
    if (!k.entries.emplace(idx, std::move(v)).second)
      throw ParseError("duplicate index " + idx.to_string(), line.front().line, line.front().column);
  }
  return k;
}

/// One line per run of n cells along the last coordinate.
inline std::string format_tensor(const BinaryTensor& a) {
  std::ostringstream out;
  out << "tensor " << a.dim() << ' ' << a.order() << '\n';
  for (std::size_t off = 0; off < a.cell_count(); ++off) {
    out << (a.at(off) ? '1' : '0');
    out << ((off + 1) % a.order() == 0 ? '\n' : ' ');
  }
  return out.str();
}

inline std::string format_cover(const CoverTable& c) {
  std::ostringstream out;
  out << "cover " << c.dim() << ' ' << c.order() << '\n';
  for (const auto& row : c.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << to_string(row[j]);
    out << '\n';
  }
  return out.str();
}

inline std::string format_polyplex(const Polyplex& k) {
  std::ostringstream out;
  out << "polyplex " << k.d << ' ' << k.n << '\n';
  for (const auto& [idx, v] : k.entries) {
    if (v == 0) continue;
    for (int c : idx) out << c + 1 << ' ';
    out << to_string(v) << '\n';
  }
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << content;
}

}  // namespace polyplex::io
