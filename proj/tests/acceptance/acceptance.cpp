// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "trisq/counts.hpp"
#include "trisq/decomposition.hpp"
#include "trisq/divisor.hpp"
#include "trisq/eisenstein.hpp"
#include "trisq/errors.hpp"
#include "trisq/qseries.hpp"
#include "trisq/verify.hpp"

using namespace trisq;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
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

constexpr std::pair<Character, Character> kPairs[] = {
    {Character::One, Character::One},          {Character::One, Character::MinusThree},
    {Character::MinusThree, Character::One},   {Character::One, Character::MinusFour},
    {Character::MinusFour, Character::One},    {Character::One, Character::Twelve},
    {Character::Twelve, Character::One},       {Character::MinusThree, Character::MinusFour},
    {Character::MinusFour, Character::MinusThree}};

std::string criterion1() {
  int checked = 0;
  for (unsigned s = 2; s <= 10; s += 2) {
    for (unsigned a = 0; a <= s; ++a) {
      const unsigned b = s - a;
      if (!membership_S(a, b)) continue;
      Rational c = Rational(2) / (2 + Rational(a * (a - 1) * (a - 2) * (a - 3) / 24) + a * b);
      if (a == 1 && b == 3) c = Rational(2, 5);
      if (a == 0) c = expected_constant(a, b);
      require(check_exact_identity({a, b, false, c, 200}).passed(), "N* = cN fails for " + pair_text(a, b));
      ++checked;
    }
  }
  return std::to_string(checked) + " pairs, n < 200";
}

std::string criterion2() {
  int checked = 0;
  for (unsigned s = 2; s <= 10; s += 2) {
    for (unsigned a = 0; a <= s; ++a) {
      const unsigned b = s - a;
      if (!membership_Stilde(a, b)) continue;
      const Rational c = expected_tilde_constant(a, b);
      if (a + 3 * b == 4) require(c == 1, "tilde constant 1 for a+3b=4");
      if (a == 1 && b == 5) require(c == Rational(1, 6), "tilde constant 1/6 for (1,5)");
      if (a + 3 * b == 8) {
        require(c == Rational(2) / (2 + Rational(a * (a - 1) * (a - 2) * (a - 3) / 24) + a * b),
                "tilde constant for a+3b=8");
      }
      require(check_exact_identity({a, b, true, c, 200}).passed(), "N* = c~ N~ fails for " + pair_text(a, b));
      ++checked;
    }
  }
  return std::to_string(checked) + " pairs, n < 200";
}

std::string criterion3() {
  std::ostringstream out;
  for (const auto& [a, b] : std::vector<std::pair<unsigned, unsigned>>{{10, 0}, {4, 2}, {2, 4}, {5, 3}, {0, 8}}) {
    const auto r = check_exact_identity({a, b, false, std::nullopt, std::nullopt});
    require(r.status == Status::Counterexample && r.witness.has_value(), "no counterexample for " + pair_text(a, b));
    require(*r.witness < default_identity_depth(a, b), "witness beyond Sturm depth for " + pair_text(a, b));
    out << pair_text(a, b) << "@n=" << *r.witness << ' ';
  }
  std::string s = out.str();
  s.pop_back();
  return s;
}

std::string criterion4() {
  constexpr std::size_t P = 500;
  for (const FormParams& p : grid()) {
    const Decomposition dec(p);
    const QSeries gamma = cusp_remainder(p, Side::Psi, P);
    const QSeries gamma_prime = cusp_remainder(p, Side::Phi, P);
    const Integer scale = ipow(Integer(2), p.sum());
    const auto all = oracle::lattice_counts(p.a, p.b, P, false);
    const auto odd = oracle::lattice_counts(p.a, p.b, P, true);
    for (std::uint64_t m = 0; m < P; ++m) {
      require(dec.beta(m) + gamma_prime[m] == Rational(all[m]),
              "beta + gamma' != N at " + pair_text(p.a, p.b) + " m=" + std::to_string(m));
      require(Rational(scale) * (dec.alpha(m) + gamma[m]) == Rational(odd[m]),
              "2^(a+b)(alpha + gamma) != N* at " + pair_text(p.a, p.b) + " m=" + std::to_string(m));
    }
  }
  const FormParams four = FormParams::make(4, 0);
  const Decomposition dec(four);
  require(cusp_remainder(four, Side::Psi, P).is_zero() && cusp_remainder(four, Side::Phi, P).is_zero(),
          "(4,0) remainders nonzero");
  for (std::uint64_t m = 1; m < P; ++m) {
    Integer jacobi = 8 * oracle::sigma(1, 1, 1, m);
    if (m % 4 == 0) jacobi -= 32 * oracle::sigma(1, 1, 1, m / 4);
    require(dec.beta(m) == Rational(jacobi), "Jacobi formula at m=" + std::to_string(m));
  }
  for (std::uint64_t n = 0; 8 * n + 4 < P; ++n) {
    require(dec.alpha(8 * n + 4) == Rational(oracle::sigma(1, 1, 1, 2 * n + 1)), "alpha_{8n+4} = sigma(2n+1)");
  }
  return std::to_string(grid().size()) + " pairs, m < 500, (4,0) Jacobi checks";
}

std::string criterion5() {
  for (const FormParams& p : grid()) {
    require(check_eisenstein_relations(p, 200).passed(), "relations fail for " + pair_text(p.a, p.b));
  }
  require(delta(2, 2, 3) == Rational(12, 13), "delta(2,2,3) != 12/13");
  return std::to_string(grid().size()) + " pairs, n < 200, delta(2,2,3) = 12/13";
}

double field_double(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.summary) {
    if (k == key) return std::stod(std::get<std::string>(v));
  }
  throw Failure{"missing summary field " + key};
}

std::string criterion6() {
  const auto four_two = check_ratio_convergence({4, 2, LimitCase::I, std::nullopt}, 5000, 0.02);
  const double mean42 = field_double(four_two, "mean_deviation");
  require(mean42 <= 0.02, "(4,2) mean deviation above 0.02");
  const auto two_two = check_ratio_convergence({2, 2, LimitCase::II, 3U}, 5000, 0.03);
  const double mean22 = field_double(two_two, "mean_deviation");
  require(mean22 <= 0.03, "(2,2) nu=3 mean deviation above 0.03");
  char buf[128];
  std::snprintf(buf, sizeof buf, "(4,2) mean dev %.2e vs 2/17; (2,2) nu=3 mean dev %.2e vs 4/13", mean42, mean22);
  return buf;
}

std::string criterion7() {
  std::ostringstream out;
  for (const auto& [a, b] : std::vector<std::pair<unsigned, unsigned>>{{6, 0}, {4, 2}, {2, 4}}) {
    const FormParams p = FormParams::make(a, b);
    const QSeries gp = cusp_remainder(p, Side::Phi, 4001);
    const double threshold = (static_cast<double>(a + b) - 2) / 4 + 0.35;
    const auto slope = loglog_slope(gp);
    if (!slope) {
      require(gp.is_zero(), "no slope but nonzero remainder for " + pair_text(a, b));
      out << pair_text(a, b) << " gamma'=0 ";
      continue;
    }
    require(*slope <= threshold, "gamma' slope above bound for " + pair_text(a, b));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s slope %.2f<=%.2f ", pair_text(a, b).c_str(), *slope, threshold);
    out << buf;
  }
  std::size_t tested = 0;
  for (unsigned k = 1; k <= 4; ++k) {
    for (const auto& [eps, psi] : kPairs) {
      if (parity(eps) * parity(psi) != ((k % 2 == 0) ? 1 : -1)) continue;
      for (std::uint64_t n = 1; n <= 10000; ++n) {
        if (std::gcd(n, std::uint64_t{6}) != 1) continue;
        require(sigma_lower_bound_holds(k, eps, psi, n), "sigma lower bound fails at n=" + std::to_string(n));
        ++tested;
      }
    }
  }
  out << "lower bound " << tested << " cases";
  return out.str();
}

std::string criterion8() {
  constexpr std::size_t P = 500;
  auto as_vector = [](const QSeries& s) { return std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()); };
  require(as_vector(eta_quotient_series(phi_eta_quotient(), P)) == oracle::eta_product({{2, 5}, {1, -2}, {4, -2}}, P),
          "phi eta quotient");
  require(eta_quotient_series(phi_eta_quotient(), P) == phi_series(P), "phi theta series");
  for (unsigned a = 0; a <= 6; ++a) {
    for (unsigned b = 0; b <= 6 - a; ++b) {
      const int ia = static_cast<int>(a);
      const int ib = static_cast<int>(b);
      const auto psi_oracle = oracle::eta_product({{16, 2 * ia}, {48, 2 * ib}, {8, -ia}, {24, -ib}}, P);
      const QSeries theta = pow(psi8_series(P), a) * pow(dilate(psi8_series(P), 3), b);
      require(as_vector(theta) == psi_oracle, "psi8 eta quotient " + pair_text(a, b));
      require(eta_quotient_series(phi_product_eta_quotient(a, b), P) == pow(phi_series(P), a) * pow(dilate(phi_series(P), 3), b),
              "phi product eta quotient " + pair_text(a, b));
    }
  }
  for (const auto& [eps, psi] : kPairs) {
    for (unsigned k = 0; k <= 4; ++k) {
      for (std::uint64_t m = 1; m <= 40; ++m) {
        for (std::uint64_t n = 1; n <= 40; ++n) {
          if (std::gcd(m, n) != 1) continue;
          require(sigma(k, eps, psi, m * n) == sigma(k, eps, psi, m) * sigma(k, eps, psi, n), "sigma multiplicativity");
        }
        require(sigma(k, eps, psi, m) == oracle::sigma(k, discriminant(eps), discriminant(psi), m), "sigma oracle");
      }
      for (unsigned e = 1; e <= 8; ++e) {
        for (unsigned r = 1; r <= e; ++r) require(two_shift_identity_holds(k, eps, psi, e, r), "two-shift identity");
      }
    }
  }
  for (unsigned k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 600; ++n) {
      if (n % 2 == 0 && n % 3 == 0) continue;
      require(twist_identity_holds(k, n), "twist identity at n=" + std::to_string(n));
    }
  }
  std::size_t vanishing = 0;
  for (const FormParams& p : grid()) {
    if (p.shift() % 4 == 0) require(check_beta_quarter_relation(p, 500).passed(), "beta quarter relation " + pair_text(p.a, p.b));
    if (p.parity_case != ParityCase::EE0 && p.parity_case != ParityCase::OO2) continue;
    for (std::uint64_t n = 0; n < 500; ++n) {
      const std::uint64_t m = 8 * n + p.shift();
      if (m == 0) continue;
      const Rational al = alpha(p, m);
      require(al == alpha_factored(p, m), "alpha_factored " + pair_text(p.a, p.b) + " m=" + std::to_string(m));
      require((al == 0) == alpha_factored_vanishes(p, m), "vanishing characterization " + pair_text(p.a, p.b));
      vanishing += al == 0;
    }
  }
  return "eta quotients to 500, sigma identities, alpha closed form (" + std::to_string(vanishing) + " zeros)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"exact identities", criterion1},      {"tilde identities", criterion2},
      {"counterexamples", criterion3},       {"decomposition oracle", criterion4},
      {"alpha/beta relations", criterion5},  {"ratio convergence", criterion6},
      {"growth diagnostics", criterion7},    {"structural identities", criterion8}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict;
    std::string detail;
    try {
      detail = criteria[i].second();
      verdict = "PASS";
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += verdict == "FAIL";
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << verdict << " criterion " << i + 1 << " [" << criteria[i].first << "] " << detail << " (" << timing
              << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
