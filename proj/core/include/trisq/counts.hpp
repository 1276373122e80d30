#pragma once

#include <cstdint>

#include "trisq/numeric.hpp"
#include "trisq/qseries.hpp"

namespace trisq {

/// Which representation number of x_1^2+...+x_a^2 + 3y_1^2+...+3y_b^2 = n.
enum class Variant {
  All,    ///< N(a,b;n): every integer tuple
  Odd,    ///< N*(a,b;n): every coordinate odd
  Tilde,  ///< N~(a,b;n) = N(n) - N(n/4): at least one odd coordinate
};

/// Generating series of the chosen variant to precision P, built as a
/// product of a + b one-dimensional theta factors:
///   All   phi^a(z) phi^b(3z)
///   Odd   2^{a+b} Psi_8^a(z) Psi_8^b(3z)
///   Tilde g(z) - g(4z) with g the All series.
/// (a, b) = (0, 0) throws PreconditionViolation.
ZSeries count_series_z(unsigned a, unsigned b, Variant variant, std::size_t precision);
QSeries count_series(unsigned a, unsigned b, Variant variant, std::size_t precision);

/// Single representation number; zero for n < 0.
Integer count(unsigned a, unsigned b, std::int64_t n, Variant variant);

/// Rational index: zero unless x is a non-negative integer.
Integer count(unsigned a, unsigned b, const Rational& x, Variant variant);

/// Independent lattice count by coordinate-wise descent with memoization
/// on (coordinate, remainder); |x| <= sqrt(n), |y| <= sqrt(n/3).
Integer count_by_enumeration(unsigned a, unsigned b, std::int64_t n, Variant variant);

/// Number of (x, y) in Z^{a+b} with n = sum x_i(x_i-1)/2 + 3 sum y_j(y_j-1)/2,
/// counted directly over triangular numbers.
Integer triangular_count(unsigned a, unsigned b, std::int64_t n);

/// N, N* and N~ for one (a, b), tabulated once up to a precision.
class RepresentationTable {
 public:
  RepresentationTable(unsigned a, unsigned b, std::size_t precision);

  unsigned a() const noexcept { return a_; }
  unsigned b() const noexcept { return b_; }
  std::size_t precision() const noexcept { return all_.precision(); }

  /// Zero for negative or fractional indices; throws std::out_of_range past
  /// the tabulated precision.
  Integer all(const Rational& m) const;
  Integer odd(const Rational& m) const;
  Integer tilde(const Rational& m) const;

  Integer get(Variant v, const Rational& m) const;

  const ZSeries& all_series() const noexcept { return all_; }
  const ZSeries& odd_series() const noexcept { return odd_; }

 private:
  unsigned a_;
  unsigned b_;
  ZSeries all_;
  ZSeries odd_;
};

}  // namespace trisq
