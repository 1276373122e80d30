#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace trisq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact integer power; exponent must be non-negative.
inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Integer ipow(long base, unsigned long exponent) {
  return ipow(Integer(base), exponent);
}

/// (-1)^e as a plain int.
constexpr int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

/// Copy in lowest terms; mpq_class values built from two integers are not.
inline Rational canonical(Rational r) {
  r.canonicalize();
  return r;
}

/// Serializes as "p/q", or "p" for integral values.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "p/q" or "-p/q" into a canonical rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// 2-adic valuation of a positive integer.
constexpr unsigned valuation2(std::uint64_t m) {
  unsigned v = 0;
  while (m != 0 && m % 2 == 0) {
    m /= 2;
    ++v;
  }
  return v;
}

constexpr unsigned valuation(std::uint64_t m, std::uint64_t p) {
  unsigned v = 0;
  while (m != 0 && m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace trisq
