#include "trisq/characters.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "trisq/errors.hpp"

namespace trisq {

std::string_view name(Character chi) {
  switch (chi) {
    case Character::One: return "chi1";
    case Character::MinusThree: return "chi-3";
    case Character::MinusFour: return "chi-4";
    case Character::Twelve: return "chi12";
  }
  return "?";
}

std::optional<Character> parse_character(std::string_view text) {
  if (text.starts_with("chi")) text.remove_prefix(3);
  if (text.starts_with("_")) text.remove_prefix(1);
  if (text == "1") return Character::One;
  if (text == "-3") return Character::MinusThree;
  if (text == "-4") return Character::MinusFour;
  if (text == "12") return Character::Twelve;
  return std::nullopt;
}

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

class BernoulliCache {
 public:
  Rational classical(unsigned n) {
    std::lock_guard lock(mutex_);
    while (classical_.size() <= n) {
      const auto m = static_cast<unsigned>(classical_.size());
      if (m == 0) {
        classical_.emplace_back(1);
        continue;
      }
      // sum_{j=0}^{m} C(m+1, j) B_j = 0
      Rational acc = 0;
      for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * classical_[j];
      Rational b = -acc / Rational(m + 1);
      b.canonicalize();
      classical_.push_back(b);
    }
    return classical_[n];
  }

  std::optional<Rational> generalized(unsigned k, Character chi) {
    std::lock_guard lock(mutex_);
    auto it = generalized_.find({k, chi});
    if (it == generalized_.end()) return std::nullopt;
    return it->second;
  }

  void store(unsigned k, Character chi, const Rational& value) {
    std::lock_guard lock(mutex_);
    generalized_.emplace(std::pair{k, chi}, value);
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> classical_;
  std::map<std::pair<unsigned, Character>, Rational> generalized_;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

}  // namespace

Rational classical_bernoulli(unsigned n) { return cache().classical(n); }

Rational bernoulli_polynomial(unsigned k, const Rational& x) {
  // B_k(x) = sum_j C(k, j) B_j x^{k-j}, evaluated by Horner in x.
  Rational acc = 0;
  for (unsigned j = 0; j <= k; ++j) {
    acc = acc * x + Rational(binomial(k, j)) * classical_bernoulli(j);
  }
  acc.canonicalize();
  return acc;
}

Rational bernoulli_number(unsigned k, Character chi) {
  if (k == 0) throw PreconditionViolation("bernoulli_number: weight must be >= 1");
  if (parity(chi) != sign_power(k)) {
    throw ParityMismatch("bernoulli_number: " + std::string(name(chi)) + "(-1) != (-1)^" +
                         std::to_string(k));
  }
  if (auto hit = cache().generalized(k, chi)) return *hit;

  const std::uint64_t n = conductor(chi);
  Rational sum = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    const int c = eval_character(chi, static_cast<std::int64_t>(a));
    if (c == 0) continue;
    sum += c * bernoulli_polynomial(k, Rational(Integer(a), Integer(n)));
  }
  sum *= Rational(ipow(Integer(n), k - 1));
  sum.canonicalize();
  cache().store(k, chi, sum);
  return sum;
}

}  // namespace trisq
