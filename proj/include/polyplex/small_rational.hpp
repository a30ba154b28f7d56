#pragma once

// Machine-word rational used as the LP fast path. Every operation is exact or
// throws SmallRational::Overflow, in which case the caller redoes the work
// with GMP rationals.

#include <climits>
#include <cstdint>
#include <numeric>

#include "polyplex/rational.hpp"

namespace polyplex::detail {

class SmallRational {
 public:
  struct Overflow {};

  SmallRational() = default;
  SmallRational(long long v) : p_(v) { check(v); }  // NOLINT(google-explicit-constructor)

  static SmallRational from(const Rational& r) {
    const auto& num = boost::multiprecision::numerator(r);
    const auto& den = boost::multiprecision::denominator(r);
    if (num > kLimit || num < -kLimit || den > kLimit) throw Overflow{};
    return raw(num.convert_to<long long>(), den.convert_to<long long>());
  }

  Rational to_rational() const { return Rational(p_) / Rational(q_); }

  long long num() const { return p_; }
  long long den() const { return q_; }

  friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
    if (a.q_ == 1 && b.q_ == 1) return raw(add(a.p_, b.p_), 1);
    const long long g = std::gcd(a.q_, b.q_);
    if (g == 1) return raw(add(mul(a.p_, b.q_), mul(b.p_, a.q_)), mul(a.q_, b.q_));
    const long long t = add(mul(a.p_, b.q_ / g), mul(b.p_, a.q_ / g));
    const long long g2 = std::gcd(t, g);
    return raw(t / g2, mul(a.q_ / g2, b.q_ / g));
  }
  friend SmallRational operator-(const SmallRational& a) { return raw(-a.p_, a.q_); }
  friend SmallRational operator-(const SmallRational& a, const SmallRational& b) { return a + (-b); }
  friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
    if (a.p_ == 0 || b.p_ == 0) return SmallRational();
    const long long g1 = std::gcd(a.p_, b.q_);
    const long long g2 = std::gcd(b.p_, a.q_);
    return raw(mul(a.p_ / g1, b.p_ / g2), mul(a.q_ / g2, b.q_ / g1));
  }
  friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
    if (b.p_ == 0) throw DomainError("division by zero");
    SmallRational inv = b.p_ < 0 ? raw(-b.q_, -b.p_) : raw(b.q_, b.p_);
    return a * inv;
  }
  SmallRational& operator+=(const SmallRational& b) { return *this = *this + b; }
  SmallRational& operator-=(const SmallRational& b) { return *this = *this - b; }
  SmallRational& operator*=(const SmallRational& b) { return *this = *this * b; }

  friend bool operator==(const SmallRational& a, const SmallRational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const SmallRational& a, const SmallRational& b) { return !(a == b); }
  friend bool operator<(const SmallRational& a, const SmallRational& b) {
    return static_cast<__int128>(a.p_) * b.q_ < static_cast<__int128>(b.p_) * a.q_;
  }
  friend bool operator>(const SmallRational& a, const SmallRational& b) { return b < a; }
  friend bool operator<=(const SmallRational& a, const SmallRational& b) { return !(b < a); }
  friend bool operator>=(const SmallRational& a, const SmallRational& b) { return !(a < b); }

 private:
  // Keeps negation and gcd arguments clear of LLONG_MIN.
  static constexpr long long kLimit = LLONG_MAX / 2;

  static void check(long long v) {
    if (v > kLimit || v < -kLimit) throw Overflow{};
  }
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    check(r);
    return r;
  }
  static long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    check(r);
    return r;
  }
  // Assumes lowest terms and a positive denominator.
  static SmallRational raw(long long p, long long q) {
    check(p);
    check(q);
    SmallRational r;
    r.p_ = p;
    r.q_ = p == 0 ? 1 : q;
    return r;
  }

  long long p_ = 0;
  long long q_ = 1;
};

}  // namespace polyplex::detail
