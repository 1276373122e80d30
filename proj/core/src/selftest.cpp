#include <functional>
#include <numeric>
#include <sstream>

#include "trisq/characters.hpp"
#include "trisq/counts.hpp"
#include "trisq/divisor.hpp"
#include "trisq/errors.hpp"
#include "trisq/verify.hpp"

namespace trisq {

namespace {

// Thrown by expect() to abort a suite at its first failed check.
struct CheckFailed {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed{what};
}

std::string pair_text(unsigned a, unsigned b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<FormParams> grid() {
  std::vector<FormParams> out;
  for (unsigned s = 4; s <= 10; s += 2) {
    for (unsigned a = 0; a <= s; ++a) out.push_back(FormParams::make(a, s - a));
  }
  return out;
}

void characters_suite() {
  for (const Character chi : kAllCharacters) {
    const auto L = static_cast<std::int64_t>(conductor(chi));
    for (std::int64_t n = -60; n <= 60; ++n) {
      const int v = eval_character(chi, n);
      expect(v >= -1 && v <= 1, "character value range");
      if (n != 0 || chi != Character::One) {
        expect((v == 0) == (std::gcd(n, L) > 1), "zero exactly off units");
      }
      expect(eval_character(chi, n + L) == v, "periodicity");
    }
    for (std::int64_t m = 1; m <= 30; ++m) {
      for (std::int64_t n = 1; n <= 30; ++n) {
        expect(eval_character(chi, m * n) == eval_character(chi, m) * eval_character(chi, n), "multiplicativity");
      }
    }
    for (unsigned k = 1; k <= 6; ++k) {
      if (sign_power(k) != parity(chi)) continue;
      expect(bernoulli_number(k, chi) != 0, "nonzero Bernoulli number");
    }
  }
}

void divisor_suite() {
  const std::vector<std::pair<Character, Character>> pairs = {
      {Character::One, Character::One},        {Character::One, Character::MinusThree},
      {Character::MinusThree, Character::One}, {Character::One, Character::MinusFour},
      {Character::MinusFour, Character::One},  {Character::One, Character::Twelve},
      {Character::Twelve, Character::One},     {Character::MinusThree, Character::MinusFour},
      {Character::MinusFour, Character::MinusThree}};
  for (const auto& [eps, psi] : pairs) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (std::uint64_t m = 1; m <= 24; ++m) {
        for (std::uint64_t n = 1; n <= 24; ++n) {
          if (std::gcd(m, n) != 1) continue;
          expect(sigma(k, eps, psi, m * n) == sigma(k, eps, psi, m) * sigma(k, eps, psi, n), "sigma multiplicativity");
        }
      }
      for (std::uint64_t n = 1; n <= 200; ++n) {
        const Factorization f = factorize(n);
        expect(sigma_factored(k, eps, psi, f) == sigma(k, eps, psi, n), "factored sigma");
      }
      for (unsigned e = 1; e <= 6; ++e) {
        for (unsigned r = 1; r <= e; ++r) expect(two_shift_identity_holds(k, eps, psi, e, r), "two-shift identity");
      }
    }
  }
  for (unsigned k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      if (n % 6 == 0) continue;
      expect(twist_identity_holds(k, n), "character twist identity");
    }
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      if (std::gcd(n, std::uint64_t{6}) != 1) continue;
      for (const auto& [eps, psi] : pairs) expect(sigma_lower_bound_holds(k, eps, psi, n), "sigma lower bound");
    }
  }
}

void qseries_suite(std::size_t precision) {
  expect(eta_quotient_series(phi_eta_quotient(), precision) == phi_series(precision), "phi eta quotient");
  for (const auto& [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {0, 1}, {2, 1}, {4, 0}, {1, 3}}) {
    const QSeries psi_prod = pow(psi8_series(precision), a) * pow(dilate(psi8_series(precision), 3), b);
    expect(eta_quotient_series(psi8_product_eta_quotient(a, b), precision) == psi_prod,
           "Psi_8 eta quotient " + pair_text(a, b));
    const QSeries phi_prod = pow(phi_series(precision), a) * pow(dilate(phi_series(precision), 3), b);
    expect(eta_quotient_series(phi_product_eta_quotient(a, b), precision) == phi_prod,
           "phi eta quotient " + pair_text(a, b));
  }
  const QSeries e = euler_product(precision);
  expect(e * inverse(e) == QSeries::one(precision), "series inverse");
}

void eisenstein_suite() {
  expect(sturm_bound({2, 768, Character::One}) == 256, "Sturm bound at level 768");
  for (const FormParams& p : grid()) {
    for (const Side side : {Side::Psi, Side::Phi}) {
      expect(plan_in_span(build_plan(p, side)), "plan outside basis span " + pair_text(p.a, p.b));
    }
  }
}

void counts_suite(std::size_t precision) {
  const std::size_t limit = std::min<std::size_t>(precision, 300);
  for (const FormParams& p : grid()) {
    for (const Variant v : {Variant::All, Variant::Odd, Variant::Tilde}) {
      const ZSeries s = count_series_z(p.a, p.b, v, limit);
      for (std::size_t m = 0; m < limit; ++m) {
        expect(s[m] == count_by_enumeration(p.a, p.b, static_cast<std::int64_t>(m), v),
               "series vs enumeration " + pair_text(p.a, p.b));
      }
    }
    const ZSeries odd = count_series_z(p.a, p.b, Variant::Odd, limit);
    for (std::size_t n = 0; 8 * n + p.shift() < limit; ++n) {
      expect(triangular_count(p.a, p.b, static_cast<std::int64_t>(n)) == odd[8 * n + p.shift()],
             "triangular bijection " + pair_text(p.a, p.b));
    }
  }
}

void decomposition_suite(ParityCase which, std::size_t precision, std::uint64_t depth) {
  static const std::vector<std::pair<unsigned, unsigned>> exact = {{4, 0}, {2, 2}, {0, 4}, {3, 1}, {1, 3},
                                                                   {6, 0}, {0, 6}, {5, 1}, {1, 5}, {8, 0}};
  for (const FormParams& p : grid()) {
    if (p.parity_case != which) continue;
    const std::string tag = " " + pair_text(p.a, p.b);
    const Decomposition dec(p);
    expect(dec.alpha(0) == 0, "psi constant term" + tag);
    expect(dec.beta(std::uint64_t{0}) == 1, "phi constant term" + tag);
    for (std::uint64_t m = 1; m < precision; ++m) {
      const Rational al = dec.alpha(m);
      if (m % 8 != p.shift() % 8) {
        expect(al == 0, "psi support" + tag);
      } else {
        expect(al == alpha_factored(p, m), "closed form" + tag);
        expect((al == 0) == alpha_factored_vanishes(p, m), "vanishing characterization" + tag);
      }
    }
    if (std::ranges::find(exact, std::pair{p.a, p.b}) != exact.end()) {
      expect(cusp_remainder(p, Side::Psi, precision).is_zero(), "psi remainder vanishes" + tag);
      expect(cusp_remainder(p, Side::Phi, precision).is_zero(), "phi remainder vanishes" + tag);
    }
    expect(check_eisenstein_relations(p, depth).passed(), "alpha/beta relations" + tag);
    if (p.shift() % 4 == 0) expect(check_beta_quarter_relation(p, depth).passed(), "beta quarter relation" + tag);
  }
}

void identities_suite(std::uint64_t depth) {
  for (unsigned s = 2; s <= 10; s += 2) {
    for (unsigned a = 0; a <= s; ++a) {
      const unsigned b = s - a;
      if (membership_S(a, b)) {
        const auto r = check_exact_identity({a, b, false, expected_constant(a, b), depth});
        expect(r.passed(), "exact identity " + pair_text(a, b));
      }
      if (membership_Stilde(a, b)) {
        const auto r = check_exact_identity({a, b, true, expected_tilde_constant(a, b), depth});
        expect(r.passed(), "tilde identity " + pair_text(a, b));
      }
    }
  }
  for (const auto& [a, b] : std::vector<std::pair<unsigned, unsigned>>{{10, 0}, {4, 2}, {2, 4}, {5, 3}, {0, 8}}) {
    const auto r = check_exact_identity({a, b, false, std::nullopt, depth});
    expect(r.status == Status::Counterexample && r.witness, "counterexample " + pair_text(a, b));
  }
  for (unsigned s = 4; s <= 10; s += 2) {
    for (unsigned a = 2; a <= s; ++a) {
      const unsigned b = s - a;
      const unsigned shift = a + 3 * b;
      if (shift < 1 || shift > 7) continue;
      expect(limit_value({a, b, LimitCase::I, std::nullopt}) == expected_constant(a, b),
             "limit vs closed form " + pair_text(a, b));
    }
  }
  expect(delta(2, 2, 3) == Rational(12, 13), "delta(2,2,3)");
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::size_t precision, std::uint64_t depth) {
  std::vector<std::pair<std::string, std::function<void()>>> suites = {
      {"characters", characters_suite},
      {"divisor", divisor_suite},
      {"qseries", [=] { qseries_suite(precision); }},
      {"eisenstein", eisenstein_suite},
      {"counts", [=] { counts_suite(precision); }},
  };
  for (const ParityCase c : {ParityCase::EE0, ParityCase::OO2, ParityCase::EE2, ParityCase::OO0}) {
    suites.emplace_back("decomposition[" + std::string(name(c)) + "]",
                        [=] { decomposition_suite(c, precision, depth); });
  }
  suites.emplace_back("verify", [=] { identities_suite(depth); });

  std::vector<SuiteResult> results;
  for (auto& [label, run] : suites) {
    SuiteResult r{label, true, ""};
    try {
      run();
    } catch (const CheckFailed& f) {
      r.passed = false;
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace trisq
