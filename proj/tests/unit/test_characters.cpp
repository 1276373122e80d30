#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "trisq/characters.hpp"
#include "trisq/errors.hpp"

using namespace trisq;

TEST(Characters, MatchResidueTables) {
  for (const Character chi : kAllCharacters) {
    for (std::int64_t n = -100; n <= 100; ++n) {
      EXPECT_EQ(eval_character(chi, n), oracle::kronecker(discriminant(chi), n)) << name(chi) << " at " << n;
    }
  }
}

TEST(Characters, PrincipalIsOneAtZero) { EXPECT_EQ(eval_character(Character::One, 0), 1); }

TEST(Characters, ZeroExactlyOffUnits) {
  for (const Character chi : {Character::MinusThree, Character::MinusFour, Character::Twelve}) {
    const auto L = static_cast<std::int64_t>(conductor(chi));
    for (std::int64_t n = -50; n <= 50; ++n) {
      EXPECT_EQ(eval_character(chi, n) == 0, std::gcd(n, L) > 1);
    }
  }
}

TEST(Characters, CompletelyMultiplicativeAndPeriodic) {
  for (const Character chi : kAllCharacters) {
    const auto L = static_cast<std::int64_t>(conductor(chi));
    for (std::int64_t m = -20; m <= 20; ++m) {
      EXPECT_EQ(eval_character(chi, m + L), eval_character(chi, m));
      for (std::int64_t n = -20; n <= 20; ++n) {
        EXPECT_EQ(eval_character(chi, m * n), eval_character(chi, m) * eval_character(chi, n));
      }
    }
  }
}

TEST(Characters, ConductorsAndProducts) {
  EXPECT_EQ(conductor(Character::One), 1U);
  EXPECT_EQ(conductor(Character::MinusThree), 3U);
  EXPECT_EQ(conductor(Character::MinusFour), 4U);
  EXPECT_EQ(conductor(Character::Twelve), 12U);
  EXPECT_EQ(product(Character::MinusThree, Character::MinusFour), Character::Twelve);
  EXPECT_EQ(product(Character::One, Character::MinusFour), Character::MinusFour);
  EXPECT_FALSE(product(Character::MinusFour, Character::Twelve).has_value());
}

TEST(Characters, NamesRoundTrip) {
  for (const Character chi : kAllCharacters) EXPECT_EQ(parse_character(name(chi)), chi);
  EXPECT_FALSE(parse_character("chi5").has_value());
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli_number(2, Character::One), Rational(1, 6));
  EXPECT_EQ(bernoulli_number(4, Character::One), Rational(-1, 30));
  EXPECT_EQ(bernoulli_number(1, Character::MinusThree), Rational(-1, 3));
  EXPECT_EQ(bernoulli_number(3, Character::MinusThree), Rational(2, 3));
  EXPECT_EQ(bernoulli_number(1, Character::MinusFour), Rational(-1, 2));
  EXPECT_EQ(bernoulli_number(3, Character::MinusFour), Rational(3, 2));
  EXPECT_EQ(bernoulli_number(2, Character::Twelve), Rational(4));
  EXPECT_EQ(bernoulli_number(4, Character::Twelve), Rational(-184));
}

TEST(Bernoulli, AgreesWithGeneratingFunction) {
  for (const Character chi : kAllCharacters) {
    for (unsigned k = 1; k <= 12; ++k) {
      if (sign_power(k) != parity(chi)) continue;
      if (chi == Character::One && k == 1) continue;
      EXPECT_EQ(bernoulli_number(k, chi), oracle::bernoulli(k, discriminant(chi))) << name(chi) << " k=" << k;
    }
  }
}

TEST(Bernoulli, NonzeroOnUsedWeights) {
  for (unsigned k = 2; k <= 10; ++k) {
    const Character chi = k % 2 == 0 ? Character::One : Character::MinusThree;
    EXPECT_NE(bernoulli_number(k, chi), 0);
    EXPECT_NE(bernoulli_number(k, k % 2 == 0 ? Character::Twelve : Character::MinusFour), 0);
  }
}

TEST(Bernoulli, RejectsParityMismatch) {
  EXPECT_THROW(bernoulli_number(2, Character::MinusFour), ParityMismatch);
  EXPECT_THROW(bernoulli_number(3, Character::Twelve), ParityMismatch);
  EXPECT_THROW(bernoulli_number(0, Character::One), PreconditionViolation);
}

TEST(Bernoulli, ClassicalNumbersAndPolynomials) {
  EXPECT_EQ(classical_bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(classical_bernoulli(6), Rational(1, 42));
  EXPECT_EQ(classical_bernoulli(7), 0);
  EXPECT_EQ(bernoulli_polynomial(2, Rational(1, 2)), Rational(-1, 12));
}
