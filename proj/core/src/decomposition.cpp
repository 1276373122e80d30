#include "trisq/decomposition.hpp"

#include <mutex>
#include <set>
#include <tuple>

#include "trisq/counts.hpp"
#include "trisq/divisor.hpp"
#include "trisq/errors.hpp"

namespace trisq {

namespace {

using C = Character;

std::mutex fault_mutex;
std::optional<TableFault> fault_slot;

Rational q(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer pow2(unsigned long e) { return ipow(Integer(2), e); }
Integer pow3(unsigned long e) { return ipow(Integer(3), e); }

// (-3)^{a/2} for even a, (-3)^{(a-1)/2} for odd a.
Integer minus_three_power(const FormParams& p) { return ipow(Integer(-3), p.a / 2); }

// (-1)^{(a+3b)/4}; only meaningful when 4 | a + 3b.
int sign_s(const FormParams& p) {
  if (p.shift() % 4 != 0) throw UnsupportedParams("(a+3b)/4 is not an integer");
  return sign_power(p.shift() / 4);
}

// (-1)^{(a+3b-2)/4}; only meaningful when a + 3b = 2 mod 4.
int sign_t(const FormParams& p) {
  if (p.shift() % 4 != 2) throw UnsupportedParams("(a+3b-2)/4 is not an integer");
  return sign_power((p.shift() - 2) / 4);
}

// Each coefficient c at dilation d expands to c(A-1)E(dz) + c(3^{2k}-A)E(3dz).
std::vector<TableRow> table_ee0(const FormParams& p, Side side) {
  const unsigned k = p.k;
  const Integer A = minus_three_power(p);
  const Integer s = sign_s(p);
  const Integer four_k = pow2(2 * k);
  const Integer nine_k = pow3(2 * k);
  const Rational m1 = A - 1;
  const Rational m3 = nine_k - A;
  if (side == Side::Psi) {
    const Integer den = pow2(4 * k) * (four_k - 1) * (nine_k - 1);
    const Rational a14 = q(s - 1, den);
    const Rational a18 = q(four_k + 1 - s, den);
    const Rational a116 = q(-four_k, den);
    return {
        {a14, m1, C::One, C::One, 4},   {a14, m3, C::One, C::One, 12},
        {a18, m1, C::One, C::One, 8},   {a18, m3, C::One, C::One, 24},
        {a116, m1, C::One, C::One, 16}, {a116, m3, C::One, C::One, 48},
    };
  }
  const Integer den = (four_k - 1) * (nine_k - 1);
  const Rational b11 = q(s, den);
  const Rational b12 = q(-(1 + s), den);
  const Rational b14 = q(four_k, den);
  return {
      {b11, m1, C::One, C::One, 1}, {b11, m3, C::One, C::One, 3},
      {b12, m1, C::One, C::One, 2}, {b12, m3, C::One, C::One, 6},
      {b14, m1, C::One, C::One, 4}, {b14, m3, C::One, C::One, 12},
  };
}

std::vector<TableRow> table_oo2(const FormParams& p, Side side) {
  const unsigned k = p.k;
  const Integer A = minus_three_power(p);
  const Integer s = sign_s(p);
  const Integer two_k1 = pow2(2 * k + 1);
  if (side == Side::Psi) {
    const Integer D = pow2(4 * k + 2) * (two_k1 + 1);
    const Rational a24 = q(1 - s, D);
    const Rational a28 = q(two_k1 - (1 - s), D);
    const Rational a216 = q(-1, two_k1 * (two_k1 + 1));
    return {
        {a24, 1, C::One, C::MinusThree, 4},   {a24, Rational(-s * A), C::MinusThree, C::One, 4},
        {a28, 1, C::One, C::MinusThree, 8},   {a28, Rational(-A), C::MinusThree, C::One, 8},
        {a216, 1, C::One, C::MinusThree, 16}, {a216, Rational(A), C::MinusThree, C::One, 16},
    };
  }
  const Integer D = two_k1 + 1;
  const Rational b21 = q(-s, D);
  const Rational b22 = q(1 + s, D);
  const Rational b24 = q(two_k1, D);
  return {
      {b21, 1, C::One, C::MinusThree, 1}, {b21, Rational(A), C::MinusThree, C::One, 1},
      {b22, 1, C::One, C::MinusThree, 2}, {b22, Rational(-s * A), C::MinusThree, C::One, 2},
      {b24, 1, C::One, C::MinusThree, 4}, {b24, Rational(A), C::MinusThree, C::One, 4},
  };
}

std::vector<TableRow> table_ee2(const FormParams& p, Side side) {
  const unsigned k = p.k;
  const Integer A = minus_three_power(p);
  const Integer t = sign_t(p);
  const Integer four_k = pow2(2 * k);
  const Integer three_k1 = pow3(2 * k + 1);
  if (side == Side::Psi) {
    const Integer den = pow2(4 * k + 2) * (three_k1 + 1);
    const Rational a32 = q(-(A - 1), den);
    const Rational a34 = q(A - 1, den);
    const Rational a36 = q(three_k1 + A, den);
    const Rational a312 = q(-(three_k1 + A), den);
    return {
        {a32, 1, C::One, C::MinusFour, 2},   {a32, Rational(t), C::MinusFour, C::One, 2},
        {a34, 1, C::One, C::MinusFour, 4},   {a34, Rational(t * four_k), C::MinusFour, C::One, 4},
        {a36, 1, C::One, C::MinusFour, 6},   {a36, Rational(-t), C::MinusFour, C::One, 6},
        {a312, 1, C::One, C::MinusFour, 12}, {a312, Rational(-t * four_k), C::MinusFour, C::One, 12},
    };
  }
  const Rational b31 = q(-(A - 1), three_k1 + 1);
  const Rational b33 = q(three_k1 + A, three_k1 + 1);
  return {
      {b31, 1, C::One, C::MinusFour, 1}, {b31, Rational(t * four_k), C::MinusFour, C::One, 1},
      {b33, 1, C::One, C::MinusFour, 3}, {b33, Rational(-t * four_k), C::MinusFour, C::One, 3},
  };
}

std::vector<TableRow> table_oo0(const FormParams& p, Side side) {
  const unsigned k = p.k;
  const Integer A = minus_three_power(p);
  const Integer t = sign_t(p);
  if (side == Side::Psi) {
    const Rational a42 = q(1, pow2(4 * k));
    const Rational a44 = q(-1, pow2(4 * k));
    const Rational a52 = q(t, pow2(4 * k));
    const Rational a54 = q(t, pow2(2 * k + 1));
    return {
        {a42, 1, C::One, C::Twelve, 2},       {a42, Rational(-A), C::MinusThree, C::MinusFour, 2},
        {a44, 1, C::One, C::Twelve, 4},       {a44, Rational(A), C::MinusThree, C::MinusFour, 4},
        {a52, 1, C::MinusFour, C::MinusThree, 2}, {a52, Rational(-A), C::Twelve, C::One, 2},
        {a54, 1, C::MinusFour, C::MinusThree, 4}, {a54, Rational(A), C::Twelve, C::One, 4},
    };
  }
  const Rational b41 = 1;
  const Rational b51 = Rational(-t * pow2(2 * k - 1));
  return {
      {b41, 1, C::One, C::Twelve, 1},           {b41, Rational(A), C::MinusThree, C::MinusFour, 1},
      {b51, 1, C::MinusFour, C::MinusThree, 1}, {b51, Rational(A), C::Twelve, C::One, 1},
  };
}

struct Split {
  unsigned e2;
  unsigned e3;
  std::uint64_t n23;
};

Split split23(std::uint64_t m) {
  Split s{valuation2(m), valuation(m, 3), m};
  for (unsigned i = 0; i < s.e2; ++i) s.n23 /= 2;
  for (unsigned i = 0; i < s.e3; ++i) s.n23 /= 3;
  return s;
}

void require_progression(const FormParams& p, std::uint64_t m) {
  if (m == 0) throw PreconditionViolation("closed form needs m > 0");
  if (m % 8 != p.shift() % 8) throw PreconditionViolation("m is not congruent to a+3b modulo 8");
}

}  // namespace

std::string_view name(ParityCase c) {
  switch (c) {
    case ParityCase::EE0: return "even-even, a+b=0 mod 4";
    case ParityCase::OO2: return "odd-odd, a+b=2 mod 4";
    case ParityCase::EE2: return "even-even, a+b=2 mod 4";
    case ParityCase::OO0: return "odd-odd, a+b=0 mod 4";
  }
  return "?";
}

std::string_view name(Side s) { return s == Side::Psi ? "psi" : "phi"; }

FormParams FormParams::make(unsigned a, unsigned b) {
  const unsigned s = a + b;
  if (s % 2 != 0) throw UnsupportedParams("a+b must be even");
  if (s < 4) throw UnsupportedParams("a+b must be at least 4");
  FormParams p;
  p.a = a;
  p.b = b;
  const bool odd = a % 2 == 1;
  if (s % 4 == 0) {
    p.parity_case = odd ? ParityCase::OO0 : ParityCase::EE0;
    p.k = s / 4;
  } else {
    p.parity_case = odd ? ParityCase::OO2 : ParityCase::EE2;
    p.k = (s - 2) / 4;
  }
  return p;
}

Character FormParams::character() const noexcept {
  switch (parity_case) {
    case ParityCase::EE0: return Character::One;
    case ParityCase::OO2: return Character::MinusThree;
    case ParityCase::EE2: return Character::MinusFour;
    case ParityCase::OO0: return Character::Twelve;
  }
  return Character::One;
}

std::vector<TableRow> coefficient_table(const FormParams& p, Side side) {
  switch (p.parity_case) {
    case ParityCase::EE0: return table_ee0(p, side);
    case ParityCase::OO2: return table_oo2(p, side);
    case ParityCase::EE2: return table_ee2(p, side);
    case ParityCase::OO0: return table_oo0(p, side);
  }
  throw UnsupportedParams("unknown parity case");
}

DecompositionPlan build_plan(const FormParams& p, Side side) {
  std::vector<TableRow> rows = coefficient_table(p, side);
  if (const auto fault = active_table_fault();
      fault && fault->table == p.parity_case && fault->side == side && fault->row < rows.size()) {
    rows[fault->row].coefficient += fault->delta;
  }
  DecompositionPlan plan;
  plan.side = side;
  plan.space = SpaceSignature{p.weight(), side == Side::Psi ? 48U : 12U, p.character()};
  for (const auto& row : rows) {
    const Rational scale = row.coefficient * row.multiplier;
    if (scale == 0) continue;
    plan.terms.push_back(EisensteinTerm{p.weight(), row.eps, row.psi, row.dilation, scale});
  }
  return plan;
}

bool plan_in_span(const DecompositionPlan& plan) {
  const SpaceSignature& sig = plan.space;
  if (sig.weight == 2 && sig.character == Character::One) {
    Rational acc = 0;
    for (const auto& t : plan.terms) {
      if (t.eps != Character::One || t.psi != Character::One || sig.level % t.dilation != 0) return false;
      acc += t.scale / Rational(Integer(t.dilation));
    }
    return acc == 0;
  }
  std::set<std::tuple<Character, Character, std::uint64_t>> basis;
  for (const auto& e : enumerate_basis(sig)) {
    for (const auto& t : e.terms) basis.emplace(t.eps, t.psi, t.dilation);
  }
  for (const auto& t : plan.terms) {
    if (t.weight != sig.weight || !basis.contains({t.eps, t.psi, t.dilation})) return false;
  }
  return true;
}

Rational alpha(const FormParams& p, std::uint64_t m) { return eis_coefficient(build_plan(p, Side::Psi).terms, m); }

Rational beta(const FormParams& p, std::uint64_t m) { return eis_coefficient(build_plan(p, Side::Phi).terms, m); }

Rational alpha_factored(const FormParams& p, std::uint64_t m) {
  require_progression(p, m);
  const auto [e2, e3, n23] = split23(m);
  const unsigned k = p.k;
  const Integer A = minus_three_power(p);

  switch (p.parity_case) {
    case ParityCase::EE0: {
      if (e2 < 2) throw PreconditionViolation("2-adic valuation below 2");
      const unsigned w = 2 * k - 1;
      const Rational core = Rational(A * (pow3(w) - 1) + 2 * pow3(w)) - q(pow3(2 * k) - 1, pow3(w * e3));
      // e2 = 2 carries the opposite sign; e2 = 3 and e2 >= 4 share one form.
      const Rational signed_core = (e2 == 2) ? Rational(-core) : core;
      const Integer den = pow2(8 * k - 3) * (pow2(2 * k) - 1) * (pow3(2 * k) - 1) * (pow3(w) - 1);
      const Rational rhs = signed_core / Rational(den) * Rational(pow2(w * e2) * pow3(w * e3) *
                                                                  sigma(w, C::One, C::One, n23));
      return rhs * eisenstein_multiplier(2 * k, C::One);
    }
    case ParityCase::OO2: {
      if (e2 < 2) throw PreconditionViolation("2-adic valuation below 2");
      const unsigned w = 2 * k;
      const Rational inv3 = q(1, pow3(w * e3));
      Rational core;
      if (e2 == 2) {
        core = inv3 + Rational(A * eval_character(C::MinusThree, static_cast<std::int64_t>(n23)));
      } else {
        // e2 = 3 and e2 >= 4
        const Integer residue = pow2(e2) * n23 % 3;
        const std::int64_t shifted = residue.get_si();
        core = Rational(sign_power(e2 + 1)) * (inv3 + Rational(A * eval_character(C::MinusThree, shifted)));
      }
      const Integer den = pow2(8 * k + 1) * (pow2(2 * k + 1) + 1);
      const Rational rhs = core / Rational(den) * Rational(pow2(w * e2) * pow3(w * e3) *
                                                           sigma(w, C::One, C::MinusThree, n23));
      return rhs * eisenstein_multiplier(2 * k + 1, C::MinusThree);
    }
    case ParityCase::EE2: {
      const unsigned w = 2 * k;
      const Integer alt = pow3(w) * -(A + 2) - A;
      const Rational core = Rational(sign_power(e3) * alt) + q(pow3(2 * k + 1) + 1, pow3(w * e3));
      const Integer den = pow2(6 * k + 1) * (pow3(w) + 1) * (pow3(2 * k + 1) + 1);
      const Rational rhs = core / Rational(den) * Rational(pow2(w * e2) * pow3(w * e3) *
                                                           sigma(w, C::One, C::MinusFour, n23));
      return rhs * eisenstein_multiplier(2 * k + 1, C::MinusFour);
    }
    case ParityCase::OO0: {
      const unsigned w = 2 * k - 1;
      const Rational core =
          q(1, pow3(w * e3)) -
          Rational(sign_power(e3) * A * eval_character(C::MinusThree, static_cast<std::int64_t>(n23)));
      const Rational rhs = core / Rational(pow2(6 * k - 2)) *
                           Rational(pow2(w * e2) * pow3(w * e3) * sigma(w, C::One, C::Twelve, n23));
      return rhs * eisenstein_multiplier(2 * k, C::Twelve);
    }
  }
  throw UnsupportedParams("unknown parity case");
}

bool alpha_factored_vanishes(const FormParams& p, std::uint64_t m) {
  require_progression(p, m);
  const auto [e2, e3, n23] = split23(m);
  if (e3 != 0) return false;
  switch (p.parity_case) {
    case ParityCase::EE0:
    case ParityCase::EE2:
      return p.a == 0;
    case ParityCase::OO2:
      return p.a == 1 && (pow2(e2) * n23) % 3 == 2;
    case ParityCase::OO0:
      return p.a == 1 && n23 % 3 == 1;
  }
  return false;
}

QSeries cusp_remainder(const FormParams& p, Side side, std::size_t precision) {
  const DecompositionPlan plan = build_plan(p, side);
  QSeries theta = count_series(p.a, p.b, side == Side::Psi ? Variant::Odd : Variant::All, precision);
  if (side == Side::Psi) theta = Rational(1, 1) / Rational(pow2(p.sum())) * theta;
  return theta - eis_series(plan.terms, precision);
}

int cos_quarter_pi(std::int64_t r) {
  if (r % 2 != 0) throw PreconditionViolation("cos(pi r/4) is irrational for odd r");
  switch (((r % 8) + 8) % 8) {
    case 0: return 1;
    case 4: return -1;
    default: return 0;
  }
}

Decomposition::Decomposition(const FormParams& p)
    : params_(p), psi_(build_plan(p, Side::Psi)), phi_(build_plan(p, Side::Phi)) {}

Rational Decomposition::alpha(std::uint64_t m) const { return eis_coefficient(psi_.terms, m); }

Rational Decomposition::beta(std::uint64_t m) const { return eis_coefficient(phi_.terms, m); }

Rational Decomposition::beta(const Rational& raw) const {
  const Rational m = canonical(raw);
  if (m.get_den() != 1 || m < 0) return 0;
  return beta(m.get_num().get_ui());
}

ScopedTableFault::ScopedTableFault(TableFault fault) {
  std::lock_guard lock(fault_mutex);
  fault_slot = std::move(fault);
}

ScopedTableFault::~ScopedTableFault() {
  std::lock_guard lock(fault_mutex);
  fault_slot.reset();
}

std::optional<TableFault> active_table_fault() {
  std::lock_guard lock(fault_mutex);
  return fault_slot;
}

}  // namespace trisq
