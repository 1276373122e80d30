#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trisq/errors.hpp"
#include "trisq/numeric.hpp"

namespace trisq {

/// Truncated formal power series sum_{n < P} c_n q^n with exact coefficients.
///
/// The precision P is part of the value: binary operations truncate to the
/// smaller precision and never extend, so every stored coefficient is known.
template <class Coeff>
class Series {
 public:
  Series() = default;

  explicit Series(std::size_t precision) : coeffs_(precision, Coeff(0)) {}

  explicit Series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

  /// The constant 1 to precision P.
  static Series one(std::size_t precision) {
    Series s(precision);
    if (precision > 0) s.coeffs_[0] = 1;
    return s;
  }

  std::size_t precision() const noexcept { return coeffs_.size(); }

  const Coeff& operator[](std::size_t n) const { return coeffs_.at(n); }
  Coeff& operator[](std::size_t n) { return coeffs_.at(n); }

  std::span<const Coeff> coefficients() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or precision() if none.
  std::size_t valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (coeffs_[n] != 0) return n;
    }
    return coeffs_.size();
  }

  bool is_zero() const { return valuation() == coeffs_.size(); }

  Series truncated(std::size_t precision) const {
    precision = std::min(precision, coeffs_.size());
    return Series(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(precision)));
  }

  friend Series operator+(const Series& s, const Series& t) {
    Series out(std::min(s.precision(), t.precision()));
    for (std::size_t n = 0; n < out.precision(); ++n) out.coeffs_[n] = s.coeffs_[n] + t.coeffs_[n];
    return out;
  }

  friend Series operator-(const Series& s, const Series& t) {
    Series out(std::min(s.precision(), t.precision()));
    for (std::size_t n = 0; n < out.precision(); ++n) out.coeffs_[n] = s.coeffs_[n] - t.coeffs_[n];
    return out;
  }

  friend Series operator*(const Coeff& c, const Series& s) {
    Series out(s.precision());
    for (std::size_t n = 0; n < out.precision(); ++n) out.coeffs_[n] = c * s.coeffs_[n];
    return out;
  }

  /// Cauchy product truncated to the smaller precision. Zero coefficients of
  /// the sparser factor are skipped, so multiplying by a theta series costs
  /// O(P sqrt P).
  friend Series operator*(const Series& s, const Series& t) {
    const std::size_t p = std::min(s.precision(), t.precision());
    Series out(p);
    const bool s_sparser = s.nonzero_count(p) <= t.nonzero_count(p);
    const Series& sparse = s_sparser ? s : t;
    const Series& dense = s_sparser ? t : s;
    for (std::size_t i = 0; i < p; ++i) {
      const Coeff& a = sparse.coeffs_[i];
      if (a == 0) continue;
      for (std::size_t j = 0; i + j < p; ++j) {
        if (dense.coeffs_[j] != 0) out.coeffs_[i + j] += a * dense.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const Series& s, const Series& t) { return s.coeffs_ == t.coeffs_; }

  template <class Other>
  Series<Other> cast() const {
    std::vector<Other> out;
    out.reserve(coeffs_.size());
    for (const Coeff& c : coeffs_) out.emplace_back(c);
    return Series<Other>(std::move(out));
  }

 private:
  std::size_t nonzero_count(std::size_t p) const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(p),
                                                  [](const Coeff& c) { return c != 0; }));
  }

  std::vector<Coeff> coeffs_;
};

using QSeries = Series<Rational>;
using ZSeries = Series<Integer>;

/// s^e by binary exponentiation; pow(s, 0) is 1.
template <class Coeff>
Series<Coeff> pow(const Series<Coeff>& s, unsigned e) {
  Series<Coeff> result = Series<Coeff>::one(s.precision());
  Series<Coeff> base = s;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// The substitution q -> q^d: coefficient n becomes c_{n/d} when d | n.
template <class Coeff>
Series<Coeff> dilate(const Series<Coeff>& s, std::size_t d) {
  if (d == 0) throw PreconditionViolation("dilate: factor must be positive");
  Series<Coeff> out(s.precision());
  for (std::size_t n = 0; n * d < s.precision(); ++n) out[n * d] = s[n];
  return out;
}

/// Multiplicative inverse of a series with constant term +-1.
template <class Coeff>
Series<Coeff> inverse(const Series<Coeff>& s) {
  const std::size_t p = s.precision();
  Series<Coeff> out(p);
  if (p == 0) return out;
  const Coeff& c0 = s[0];
  if (c0 != 1 && c0 != -1) throw PreconditionViolation("inverse: constant term must be a unit");
  out[0] = c0;  // 1/c0 == c0 for units
  for (std::size_t n = 1; n < p; ++n) {
    Coeff acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (s[i] != 0) acc += s[i] * out[n - i];
    }
    out[n] = -c0 * acc;
  }
  return out;
}

/// phi(q) = sum_{m in Z} q^{m^2}.
template <class Coeff = Rational>
Series<Coeff> phi_series(std::size_t precision) {
  Series<Coeff> s(precision);
  if (precision == 0) return s;
  s[0] = 1;
  for (std::size_t m = 1; m * m < precision; ++m) s[m * m] = 2;
  return s;
}

/// Psi_8(q) = sum_{m >= 1} q^{8 m(m-1)/2 + 1}, i.e. q^{x^2} over odd x > 0.
template <class Coeff = Rational>
Series<Coeff> psi8_series(std::size_t precision) {
  Series<Coeff> s(precision);
  for (std::size_t m = 1;; ++m) {
    const std::size_t e = 4 * m * (m - 1) + 1;
    if (e >= precision) break;
    s[e] = 1;
  }
  return s;
}

/// prod_{n >= 1} (1 - q^n), via Euler's pentagonal number theorem.
template <class Coeff = Rational>
Series<Coeff> euler_product(std::size_t precision) {
  Series<Coeff> s(precision);
  if (precision == 0) return s;
  s[0] = 1;
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
    const auto g1 = static_cast<std::size_t>(j * (3 * j - 1) / 2);
    const auto g2 = static_cast<std::size_t>(j * (3 * j + 1) / 2);
    if (g1 >= precision) break;
    s[g1] += Coeff(static_cast<long>(sign));
    if (g2 < precision) s[g2] += Coeff(static_cast<long>(sign));
  }
  return s;
}

/// One factor eta(d z)^exponent of an eta quotient.
struct EtaFactor {
  std::uint64_t dilation;
  int exponent;
};

/// prod eta(d z)^{e_d}, expanded as q^{(sum d e_d)/24} prod (1 - q^{dn})^{e_d}.
struct EtaQuotient {
  std::vector<EtaFactor> factors;

  /// (sum d * e) / 24, possibly fractional.
  Rational leading_exponent() const {
    Integer acc = 0;
    for (const auto& f : factors) acc += Integer(f.dilation) * f.exponent;
    Rational r(acc, 24);
    r.canonicalize();
    return r;
  }
};

/// Expands an eta quotient to precision P. Throws FractionalValuation when the
/// leading exponent is negative or non-integral.
template <class Coeff = Rational>
Series<Coeff> eta_quotient_series(const EtaQuotient& eq, std::size_t precision) {
  const Rational lead = eq.leading_exponent();
  if (lead.get_den() != 1 || lead < 0) {
    throw FractionalValuation("eta quotient has leading q-power " + lead.get_str());
  }
  const std::size_t shift = lead.get_num().get_ui();
  Series<Coeff> out(precision);
  if (shift >= precision) return out;

  const std::size_t body_precision = precision - shift;
  Series<Coeff> body = Series<Coeff>::one(body_precision);
  const Series<Coeff> euler = euler_product<Coeff>(body_precision);
  for (const auto& f : eq.factors) {
    if (f.dilation == 0) throw PreconditionViolation("eta factor with zero dilation");
    if (f.exponent == 0) continue;
    Series<Coeff> factor = dilate(euler, f.dilation);
    if (f.exponent < 0) factor = inverse(factor);
    body = body * pow(factor, static_cast<unsigned>(f.exponent < 0 ? -f.exponent : f.exponent));
  }
  for (std::size_t n = 0; n < body_precision; ++n) out[n + shift] = body[n];
  return out;
}

/// phi(z) = eta^5(2z) / (eta^2(z) eta^2(4z)).
inline EtaQuotient phi_eta_quotient() { return {{{2, 5}, {1, -2}, {4, -2}}}; }

/// Psi_8^a(z) Psi_8^b(3z) = eta^{2a}(16z) eta^{2b}(48z) / (eta^a(8z) eta^b(24z)).
inline EtaQuotient psi8_product_eta_quotient(unsigned a, unsigned b) {
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  return {{{16, 2 * ia}, {48, 2 * ib}, {8, -ia}, {24, -ib}}};
}

/// phi^a(z) phi^b(3z) as an eta quotient.
inline EtaQuotient phi_product_eta_quotient(unsigned a, unsigned b) {
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  return {{{2, 5 * ia}, {6, 5 * ib}, {1, -2 * ia}, {4, -2 * ia}, {3, -2 * ib}, {12, -2 * ib}}};
}

}  // namespace trisq
