#include "trisq/eisenstein.hpp"

#include <string>

#include "trisq/divisor.hpp"
#include "trisq/errors.hpp"

namespace trisq {

Character EisensteinTerm::character() const {
  const auto chi = product(eps, psi);
  if (!chi) {
    throw PreconditionViolation("Eisenstein term with non-coprime conductors " +
                                std::string(name(eps)) + ", " + std::string(name(psi)));
  }
  return *chi;
}

void EisensteinTerm::validate() const {
  if (weight == 0) throw PreconditionViolation("Eisenstein term with weight 0");
  if (dilation == 0) throw PreconditionViolation("Eisenstein term with dilation 0");
  const Character chi = character();
  if (parity(chi) != sign_power(weight)) {
    throw ParityMismatch("E_" + std::to_string(weight) + "(" + std::string(name(eps)) + ", " +
                         std::string(name(psi)) + "): character parity does not match weight");
  }
}

Rational eisenstein_multiplier(unsigned weight, Character chi) {
  Rational m = Rational(-2 * static_cast<long>(weight)) / bernoulli_number(weight, chi);
  m.canonicalize();
  return m;
}

Rational eis_coefficient(const EisensteinTerm& term, std::uint64_t n) {
  term.validate();
  if (n == 0) return term.eps == Character::One ? term.scale : Rational(0);
  if (n % term.dilation != 0) return 0;
  const Integer s = sigma(term.weight - 1, term.eps, term.psi, n / term.dilation);
  if (s == 0) return 0;
  Rational out = term.scale * eisenstein_multiplier(term.weight, term.character()) * Rational(s);
  out.canonicalize();
  return out;
}

Rational eis_coefficient(const EisensteinCombination& terms, std::uint64_t n) {
  Rational acc = 0;
  for (const auto& t : terms) acc += eis_coefficient(t, n);
  acc.canonicalize();
  return acc;
}

QSeries eis_series(const EisensteinTerm& term, std::size_t precision) {
  QSeries out(precision);
  for (std::size_t n = 0; n < precision; ++n) out[n] = eis_coefficient(term, n);
  return out;
}

QSeries eis_series(const EisensteinCombination& terms, std::size_t precision) {
  QSeries out(precision);
  for (std::size_t n = 0; n < precision; ++n) out[n] = eis_coefficient(terms, n);
  return out;
}

std::vector<BasisElement> enumerate_basis(const SpaceSignature& sig) {
  if (sig.level != 12 && sig.level != 48) {
    throw UnsupportedSpace("enumerate_basis: level " + std::to_string(sig.level) + " unsupported");
  }
  if (sig.weight == 0 || parity(sig.character) != sign_power(sig.weight)) {
    throw UnsupportedSpace("enumerate_basis: weight " + std::to_string(sig.weight) +
                           " incompatible with " + std::string(name(sig.character)));
  }

  std::vector<BasisElement> out;
  const bool modified = sig.weight == 2 && sig.character == Character::One;
  for (Character eps : kAllCharacters) {
    for (Character psi : kAllCharacters) {
      const auto chi = product(eps, psi);
      if (!chi || *chi != sig.character) continue;
      if (sig.weight == 1 && conductor(eps) > conductor(psi)) continue;
      const std::uint64_t lm = conductor(eps) * conductor(psi);
      for (std::uint64_t d = 1; lm * d <= sig.level; ++d) {
        if (sig.level % (lm * d) != 0) continue;
        if (modified && eps == Character::One && psi == Character::One) {
          if (d == 1) continue;
          out.push_back({{EisensteinTerm{2, eps, psi, 1, 1},
                          EisensteinTerm{2, eps, psi, d, Rational(-static_cast<long>(d))}}});
        } else {
          out.push_back({{EisensteinTerm{sig.weight, eps, psi, d, 1}}});
        }
      }
    }
  }
  return out;
}

std::uint64_t gamma0_index(std::uint64_t level) {
  if (level == 0) throw PreconditionViolation("gamma0_index: level must be positive");
  Integer num = level;
  Integer den = 1;
  for (const auto& pp : factorize(level)) {
    num *= pp.prime + 1;
    den *= pp.prime;
  }
  return Integer(num / den).get_ui();
}

std::uint64_t sturm_bound(const SpaceSignature& sig) {
  const std::uint64_t scaled = sig.weight * gamma0_index(sig.level);
  return (scaled + 11) / 12;
}

}  // namespace trisq
