#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "trisq/numeric.hpp"

namespace trisq {

/// The four real primitive Dirichlet characters chi_D = (D / .) for the
/// fundamental discriminants D in {1, -3, -4, 12}.
enum class Character : int {
  One = 1,
  MinusThree = -3,
  MinusFour = -4,
  Twelve = 12,
};

inline constexpr std::array<Character, 4> kAllCharacters = {
    Character::One, Character::MinusThree, Character::MinusFour, Character::Twelve};

constexpr int discriminant(Character chi) { return static_cast<int>(chi); }

constexpr std::uint64_t conductor(Character chi) {
  switch (chi) {
    case Character::One: return 1;
    case Character::MinusThree: return 3;
    case Character::MinusFour: return 4;
    case Character::Twelve: return 12;
  }
  return 1;
}

/// Kronecker symbol (D / n). Defined for every integer n; chi_1(0) = 1.
constexpr int eval_character(Character chi, std::int64_t n) {
  const auto m = static_cast<std::int64_t>(conductor(chi));
  const std::int64_t r = ((n % m) + m) % m;
  switch (chi) {
    case Character::One:
      return 1;
    case Character::MinusThree:
      return r == 0 ? 0 : (r == 1 ? 1 : -1);
    case Character::MinusFour:
      return r % 2 == 0 ? 0 : (r == 1 ? 1 : -1);
    case Character::Twelve:
      if (r == 1 || r == 11) return 1;
      if (r == 5 || r == 7) return -1;
      return 0;
  }
  return 0;
}

/// chi(-1): +1 for even characters, -1 for odd ones.
constexpr int parity(Character chi) { return eval_character(chi, -1); }

constexpr bool coprime_conductors(Character a, Character b) {
  const std::uint64_t x = conductor(a);
  const std::uint64_t y = conductor(b);
  return !((x % 2 == 0 && y % 2 == 0) || (x % 3 == 0 && y % 3 == 0));
}

/// The primitive character agreeing with eps * psi, when eps and psi have
/// coprime conductors (the product is then again one of the four).
constexpr std::optional<Character> product(Character eps, Character psi) {
  if (!coprime_conductors(eps, psi)) return std::nullopt;
  const int d = discriminant(eps) * discriminant(psi);
  switch (d) {
    case 1: return Character::One;
    case -3: return Character::MinusThree;
    case -4: return Character::MinusFour;
    case 12: return Character::Twelve;
    default: return std::nullopt;
  }
}

std::string_view name(Character chi);

/// Parses "1", "-3", "-4", "12" (optionally prefixed with "chi").
std::optional<Character> parse_character(std::string_view text);

/// Generalized Bernoulli number B_{k,chi}, computed exactly from the
/// Bernoulli-polynomial formula N^{k-1} sum_{a=1}^{N} chi(a) B_k(a/N) and
/// memoized. Only pairs with chi(-1) = (-1)^k are accepted (otherwise the
/// value is zero); throws ParityMismatch.
Rational bernoulli_number(unsigned k, Character chi);

/// Classical Bernoulli numbers with B_1 = -1/2.
Rational classical_bernoulli(unsigned n);

/// Bernoulli polynomial B_k(x).
Rational bernoulli_polynomial(unsigned k, const Rational& x);

}  // namespace trisq
