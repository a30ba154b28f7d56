#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "polyplex/error.hpp"

namespace polyplex {

/// Exact rational in lowest terms with a positive denominator (GMP mpq).
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num) / Rational(den);
}

/// Lowest-terms rendering: `p/q`, or `p` when the value is an integer.
inline std::string to_string(const Rational& x) { return x.str(); }

/// Parses `p/q` or `p` (optional leading minus). Rejects zero denominators.
inline Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw DomainError("malformed rational '" + std::string(text) + "'");
  boost::multiprecision::mpz_int p{std::string(num)};
  boost::multiprecision::mpz_int q{std::string(den)};
  if (q == 0) throw DomainError("rational with zero denominator '" + std::string(text) + "'");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

}  // namespace polyplex
