#include "trisq/divisor.hpp"

#include <cmath>
#include <string>

#include "trisq/errors.hpp"

namespace trisq {

Factorization factorize(std::uint64_t n) {
  Factorization out;
  if (n < 2) return out;
  auto pull = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  pull(2);
  pull(3);
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    pull(p);
    pull(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

unsigned omega(std::uint64_t n) { return static_cast<unsigned>(factorize(n).size()); }

namespace {

void require_coprime(Character eps, Character psi) {
  if (!coprime_conductors(eps, psi)) {
    throw PreconditionViolation("sigma: characters " + std::string(name(eps)) + ", " +
                                std::string(name(psi)) + " have non-coprime conductors");
  }
}

// Local factor at p^e by direct geometric summation.
Integer local_sum(unsigned k, Character eps, Character psi, std::uint64_t p, unsigned e) {
  const auto sp = static_cast<std::int64_t>(p);
  const Integer psi_term = eval_character(psi, sp) * ipow(Integer(p), k);
  const Integer eps_p = eval_character(eps, sp);
  Integer acc = 0;
  for (unsigned i = 0; i <= e; ++i) acc += ipow(psi_term, i) * ipow(eps_p, e - i);
  return acc;
}

}  // namespace

Integer sigma(unsigned k, Character eps, Character psi, std::uint64_t n) {
  require_coprime(eps, psi);
  if (n == 0) return 0;
  const auto sn = static_cast<std::int64_t>(n);
  Integer acc = 0;
  auto add = [&](std::uint64_t d) {
    const int c = eval_character(eps, sn / static_cast<std::int64_t>(d)) *
                  eval_character(psi, static_cast<std::int64_t>(d));
    if (c != 0) acc += c * ipow(Integer(d), k);
  };
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    add(d);
    if (d * d != n) add(n / d);
  }
  return acc;
}

Integer sigma(unsigned k, Character eps, Character psi, const Rational& raw) {
  require_coprime(eps, psi);
  const Rational x = canonical(raw);
  if (x.get_den() != 1 || x <= 0) return 0;
  const Integer& num = x.get_num();
  if (!num.fits_ulong_p()) throw PreconditionViolation("sigma: index too large");
  return sigma(k, eps, psi, static_cast<std::uint64_t>(num.get_ui()));
}

Integer sigma_factored(unsigned k, Character eps, Character psi,
                       std::span<const PrimePower> factorization) {
  require_coprime(eps, psi);
  Integer result = 1;
  std::uint64_t previous = 0;
  for (const PrimePower& pp : factorization) {
    if (pp.exponent == 0 || !is_prime(pp.prime) || pp.prime <= previous) {
      throw InvalidFactorization("sigma_factored: bad prime power " + std::to_string(pp.prime) +
                                 "^" + std::to_string(pp.exponent));
    }
    previous = pp.prime;
    const auto sp = static_cast<std::int64_t>(pp.prime);
    const Integer psi_term = eval_character(psi, sp) * ipow(Integer(pp.prime), k);
    const Integer eps_p = eval_character(eps, sp);
    const Integer den = psi_term - eps_p;
    if (den == 0) {
      result *= local_sum(k, eps, psi, pp.prime, pp.exponent);
      continue;
    }
    const Integer num = ipow(psi_term, pp.exponent + 1) - ipow(eps_p, pp.exponent + 1);
    result *= num / den;  // exact
  }
  return result;
}

bool two_shift_identity_holds(unsigned k, Character eps, Character psi, unsigned e, unsigned r) {
  if (r < 1 || r > e) throw PreconditionViolation("two_shift_identity: need 1 <= r <= e");
  const Integer eps2 = eval_character(eps, 2);
  const Integer psi_term = eval_character(psi, 2) * ipow(Integer(2), k);
  const Integer lhs = sigma(k, eps, psi, std::uint64_t{1} << e) -
                      ipow(eps2, r) * sigma(k, eps, psi, std::uint64_t{1} << (e - r));
  Integer rhs = 0;
  for (unsigned i = 0; i < r; ++i) rhs += ipow(eps2, i) * ipow(psi_term, e - i);
  return lhs == rhs;
}

bool twist_identity_holds(unsigned k, std::uint64_t n) {
  const bool odd = n % 2 == 1;
  const bool coprime3 = n % 3 != 0;
  if (n == 0 || (!odd && !coprime3)) {
    throw PreconditionViolation("twist_identity: n must be odd or coprime to 3");
  }
  using C = Character;
  const auto sn = static_cast<std::int64_t>(n);
  bool ok = true;
  if (odd) {
    const int t = eval_character(C::MinusFour, sn);
    ok = ok && sigma(k, C::MinusFour, C::One, n) == t * sigma(k, C::One, C::MinusFour, n);
    ok = ok && sigma(k, C::MinusFour, C::MinusThree, n) == t * sigma(k, C::One, C::Twelve, n);
    ok = ok && sigma(k, C::Twelve, C::One, n) == t * sigma(k, C::MinusThree, C::MinusFour, n);
  }
  if (coprime3) {
    const int t = eval_character(C::MinusThree, sn);
    ok = ok && sigma(k, C::MinusThree, C::One, n) == t * sigma(k, C::One, C::MinusThree, n);
    ok = ok && sigma(k, C::MinusThree, C::MinusFour, n) == t * sigma(k, C::One, C::Twelve, n);
  }
  return ok;
}

bool sigma_lower_bound_holds(unsigned k, Character eps, Character psi, std::uint64_t n) {
  if (k < 1 || n == 0 || n % 2 == 0 || n % 3 == 0) {
    throw PreconditionViolation("sigma_lower_bound: need k >= 1 and gcd(n, 6) = 1");
  }
  const unsigned w = omega(n);
  Integer lhs = abs(sigma(k, eps, psi, n)) * ipow(Integer(5), w);
  Integer rhs = ipow(Integer(n), k) * ipow(Integer(3), w);
  return lhs >= rhs;
}

double omega_upper_bound(std::uint64_t n) {
  const double ln = std::log(static_cast<double>(n));
  return 1.38402 * ln / std::log(ln);
}

}  // namespace trisq
