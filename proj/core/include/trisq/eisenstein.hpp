#pragma once

#include <cstdint>
#include <vector>

#include "trisq/characters.hpp"
#include "trisq/numeric.hpp"
#include "trisq/qseries.hpp"

namespace trisq {

/// scale * E_k(d z; eps, psi), where
///   E_k(z; eps, psi) = eps(0) - (2k / B_{k, eps*psi}) sum_{n>=1} sigma_{k-1}(eps, psi; n) q^n.
struct EisensteinTerm {
  unsigned weight = 2;
  Character eps = Character::One;
  Character psi = Character::One;
  std::uint64_t dilation = 1;
  Rational scale = 1;

  /// The product character eps * psi (eps and psi must have coprime conductors).
  Character character() const;

  /// Throws ParityMismatch unless eps(-1) psi(-1) = (-1)^k, and
  /// PreconditionViolation for a zero weight/dilation or non-coprime conductors.
  void validate() const;
};

using EisensteinCombination = std::vector<EisensteinTerm>;

/// -2k / B_{k, chi}: the normalizing factor of the non-constant coefficients.
Rational eisenstein_multiplier(unsigned weight, Character chi);

/// Coefficient of q^n in scale * E_k(dz; eps, psi).
Rational eis_coefficient(const EisensteinTerm& term, std::uint64_t n);

/// Coefficient of q^n of a linear combination.
Rational eis_coefficient(const EisensteinCombination& terms, std::uint64_t n);

QSeries eis_series(const EisensteinTerm& term, std::size_t precision);
QSeries eis_series(const EisensteinCombination& terms, std::size_t precision);

/// Weight, level and character of a space M_k(Gamma_0(N), chi).
struct SpaceSignature {
  unsigned weight = 2;
  std::uint64_t level = 12;
  Character character = Character::One;

  friend bool operator==(const SpaceSignature&, const SpaceSignature&) = default;
};

/// One basis element of the Eisenstein subspace. For (k, chi) = (2, chi1)
/// the elements are E_2(z) - d E_2(dz) and carry two terms; otherwise a single
/// term with unit scale.
struct BasisElement {
  EisensteinCombination terms;
};

/// Basis descriptors {E_k(dz; eps, psi) : eps * psi = chi, L M d | N} over
/// coprime-conductor pairs drawn from the four characters. Supported levels
/// are 12 and 48; weight-1 spaces keep one representative per unordered
/// {eps, psi}. Throws UnsupportedSpace otherwise.
std::vector<BasisElement> enumerate_basis(const SpaceSignature& sig);

/// [SL_2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p).
std::uint64_t gamma0_index(std::uint64_t level);

/// ceil(k * [SL_2(Z) : Gamma_0(N)] / 12).
std::uint64_t sturm_bound(const SpaceSignature& sig);

/// Level of the progression-restricted generating functions (12 * 8^2).
inline constexpr std::uint64_t kRestrictedLevel = 768;

}  // namespace trisq
