#pragma once

// Reference implementations kept deliberately naive and independent of the
// library code paths they check.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline int kronecker(int D, std::int64_t n) {
  const std::int64_t r3 = ((n % 3) + 3) % 3;
  const std::int64_t r4 = ((n % 4) + 4) % 4;
  const std::int64_t r12 = ((n % 12) + 12) % 12;
  switch (D) {
    case 1: return 1;
    case -3: return r3 == 0 ? 0 : (r3 == 1 ? 1 : -1);
    case -4: return r4 % 2 == 0 ? 0 : (r4 == 1 ? 1 : -1);
    case 12: return (r12 == 1 || r12 == 11) ? 1 : ((r12 == 5 || r12 == 7) ? -1 : 0);
    default: std::abort();
  }
}

/// sum_{d | n} eps(n/d) psi(d) d^k by trial over every d <= n.
inline mpz_class sigma(unsigned k, int eps, int psi, std::uint64_t n) {
  mpz_class acc = 0;
  if (n == 0) return acc;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    acc += kronecker(eps, static_cast<std::int64_t>(n / d)) * kronecker(psi, static_cast<std::int64_t>(d)) * dk;
  }
  return acc;
}

/// B_{k,chi} from sum_{a=1}^{f} chi(a) t e^{at} / (e^{ft} - 1) = sum_k B_{k,chi} t^k / k!.
inline mpq_class bernoulli(unsigned k, int D) {
  const int f = D == 1 ? 1 : std::abs(D);
  const unsigned n = k + 1;
  // t / (e^{ft} - 1) = (1/f) / (sum_j (ft)^j / (j+1)!)
  std::vector<mpq_class> den(n), inv(n), fact(n + 2, 1);
  for (unsigned i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;
  for (unsigned j = 0; j < n; ++j) {
    mpz_class fj;
    mpz_ui_pow_ui(fj.get_mpz_t(), f, j);
    den[j] = mpq_class(fj) / fact[j + 1];
  }
  inv[0] = 1;
  for (unsigned i = 1; i < n; ++i) {
    mpq_class acc = 0;
    for (unsigned j = 1; j <= i; ++j) acc += den[j] * inv[i - j];
    inv[i] = -acc;
  }
  std::vector<mpq_class> num(n, 0);
  for (int a = 1; a <= f; ++a) {
    const int c = kronecker(D, a);
    if (c == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      mpz_class aj;
      mpz_ui_pow_ui(aj.get_mpz_t(), static_cast<unsigned long>(a), j);
      num[j] += c * mpq_class(aj) / fact[j];
    }
  }
  mpq_class coeff = 0;
  for (unsigned j = 0; j <= k; ++j) coeff += num[j] * inv[k - j];
  coeff /= f;
  mpq_class out = coeff * fact[k];
  out.canonicalize();
  return out;
}

/// Coefficient of q^n in E_k(dz; eps, psi).
inline mpq_class eisenstein(unsigned k, int eps, int psi, std::uint64_t d, std::uint64_t n) {
  const int chi = eps == 1 ? psi : (psi == 1 ? eps : 12);  // only chi_-3 * chi_-4 remains
  if (n == 0) return eps == 1 ? mpq_class(1) : mpq_class(0);
  if (n % d != 0) return 0;
  return mpq_class(-2 * static_cast<long>(k)) / bernoulli(k, chi) * mpq_class(sigma(k - 1, eps, psi, n / d));
}

/// Lattice count over the full box, one coordinate at a time.
inline mpz_class lattice_count(unsigned a, unsigned b, std::int64_t n, bool odd_only) {
  if (n < 0) return 0;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  const unsigned dims = a + b;
  std::function<mpz_class(unsigned, std::int64_t)> rec = [&](unsigned i, std::int64_t rem) -> mpz_class {
    if (i == dims) return rem == 0 ? 1 : 0;
    const std::int64_t w = i < a ? 1 : 3;
    mpz_class total = 0;
    for (std::int64_t x = -r; x <= r; ++x) {
      if (odd_only && x % 2 == 0) continue;
      if (w * x * x <= rem) total += rec(i + 1, rem - w * x * x);
    }
    return total;
  };
  return rec(0, n);
}

/// Counts for every n < P at once: one coordinate at a time, adding each
/// admissible w x^2 to every partial sum.
inline std::vector<mpz_class> lattice_counts(unsigned a, unsigned b, std::size_t P, bool odd_only) {
  std::vector<mpz_class> acc(P, 0);
  if (P == 0) return acc;
  acc[0] = 1;
  for (unsigned i = 0; i < a + b; ++i) {
    const std::size_t w = i < a ? 1 : 3;
    std::vector<mpz_class> next(P, 0);
    for (std::int64_t x = -static_cast<std::int64_t>(P); x <= static_cast<std::int64_t>(P); ++x) {
      if (odd_only && x % 2 == 0) continue;
      const auto step = w * static_cast<std::size_t>(x * x);
      if (step >= P) continue;
      for (std::size_t n = 0; n + step < P; ++n) next[n + step] += acc[n];
    }
    acc = std::move(next);
  }
  return acc;
}

/// prod_{factors} prod_{m >= 1} (1 - q^{d m})^{e}, q-shifted, by repeated
/// multiplication and division with binomials.
inline std::vector<mpq_class> eta_product(const std::vector<std::pair<unsigned, int>>& factors, std::size_t P) {
  std::vector<mpq_class> s(P, 0);
  long shift24 = 0;
  for (auto [d, e] : factors) shift24 += static_cast<long>(d) * e;
  if (shift24 % 24 != 0 || shift24 < 0) std::abort();
  const auto shift = static_cast<std::size_t>(shift24 / 24);
  if (shift >= P) return s;
  std::vector<mpq_class> body(P - shift, 0);
  body[0] = 1;
  for (auto [d, e] : factors) {
    for (std::size_t step = d; step < body.size(); step += d) {
      for (int rep = 0; rep < std::abs(e); ++rep) {
        if (e > 0) {
          for (std::size_t i = body.size(); i-- > step;) body[i] -= body[i - step];
        } else {
          for (std::size_t i = step; i < body.size(); ++i) body[i] += body[i - step];
        }
      }
    }
  }
  for (std::size_t i = 0; i < body.size(); ++i) s[i + shift] = body[i];
  return s;
}

}  // namespace oracle
