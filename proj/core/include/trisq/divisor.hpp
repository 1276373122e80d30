#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trisq/characters.hpp"
#include "trisq/numeric.hpp"

namespace trisq {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Trial-division factorization, primes ascending. factorize(1) is empty.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Number of distinct prime divisors.
unsigned omega(std::uint64_t n);

/// sigma_k(eps, psi; n) = sum_{d | n} eps(n/d) psi(d) d^k for n >= 1.
/// eps and psi must have coprime conductors (PreconditionViolation).
Integer sigma(unsigned k, Character eps, Character psi, std::uint64_t n);

/// Rational-index form: zero unless x is a positive integer.
Integer sigma(unsigned k, Character eps, Character psi, const Rational& x);

/// sigma evaluated prime by prime as
///   prod_p ((psi(p) p^k)^{e+1} - eps(p)^{e+1}) / (psi(p) p^k - eps(p)),
/// with a geometric-sum fallback when a local denominator vanishes.
/// Throws InvalidFactorization unless the primes are distinct, prime, and
/// the exponents positive.
Integer sigma_factored(unsigned k, Character eps, Character psi,
                       std::span<const PrimePower> factorization);

/// sigma_k(eps,psi;2^e) - eps(2)^r sigma_k(eps,psi;2^{e-r})
///   == sum_{i=0}^{r-1} eps(2)^i (psi(2) 2^k)^{e-i}.
/// Requires 1 <= r <= e (PreconditionViolation otherwise).
bool two_shift_identity_holds(unsigned k, Character eps, Character psi, unsigned e, unsigned r);

/// The character-twist identities relating sigma_k with swapped characters:
/// for odd n,
///   sigma_k(chi-4, chi1; n)  = chi-4(n) sigma_k(chi1, chi-4; n)
///   sigma_k(chi-4, chi-3; n) = chi-4(n) sigma_k(chi1, chi12; n)
///   sigma_k(chi12, chi1; n)  = chi-4(n) sigma_k(chi-3, chi-4; n)
/// and for n coprime to 3,
///   sigma_k(chi-3, chi1; n)  = chi-3(n) sigma_k(chi1, chi-3; n)
///   sigma_k(chi-3, chi-4; n) = chi-3(n) sigma_k(chi1, chi12; n).
/// Every family whose hypothesis n satisfies is checked; throws
/// PreconditionViolation when n is even and divisible by 3 (or n < 1).
bool twist_identity_holds(unsigned k, std::uint64_t n);

/// |sigma_k(eps,psi;n)| >= n^k (3/5)^{omega(n)}, compared exactly.
/// Requires gcd(n, 6) = 1 and k >= 1.
bool sigma_lower_bound_holds(unsigned k, Character eps, Character psi, std::uint64_t n);

/// 1.38402 log n / log log n, the explicit bound on omega(n) for n >= 3.
double omega_upper_bound(std::uint64_t n);

}  // namespace trisq
