#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trisq/eisenstein.hpp"
#include "trisq/numeric.hpp"
#include "trisq/qseries.hpp"

namespace trisq {

/// Parity class of (a, b); selects the coefficient table.
enum class ParityCase {
  EE0,  ///< a, b even, a + b = 4k
  OO2,  ///< a, b odd,  a + b = 4k + 2
  EE2,  ///< a, b even, a + b = 4k + 2
  OO0,  ///< a, b odd,  a + b = 4k
};

std::string_view name(ParityCase c);

enum class Side {
  Psi,  ///< Psi_8^a(z) Psi_8^b(3z), level 48
  Phi,  ///< phi^a(z) phi^b(3z), level 12
};

std::string_view name(Side s);

struct FormParams {
  unsigned a = 0;
  unsigned b = 0;
  ParityCase parity_case = ParityCase::EE0;
  unsigned k = 1;

  /// Throws UnsupportedParams unless a + b is even and at least 4.
  static FormParams make(unsigned a, unsigned b);

  unsigned sum() const noexcept { return a + b; }
  unsigned weight() const noexcept { return (a + b) / 2; }
  /// a + 3b, the residue class of the psi-side support modulo 8.
  unsigned shift() const noexcept { return a + 3 * b; }
  Character character() const noexcept;

  friend bool operator==(const FormParams&, const FormParams&) = default;
};

/// One printed row: coefficient * multiplier * E_k(dz; eps, psi).
/// The coefficient is the a_{i,j} / b_{i,j} constant, the multiplier the
/// bracketed factor it distributes over.
struct TableRow {
  Rational coefficient;
  Rational multiplier;
  Character eps;
  Character psi;
  std::uint64_t dilation;
};

/// Rows of the coefficient table for (p, side), before zero rows are dropped.
std::vector<TableRow> coefficient_table(const FormParams& p, Side side);

struct DecompositionPlan {
  Side side = Side::Psi;
  EisensteinCombination terms;
  SpaceSignature space;
};

/// The Eisenstein part of the psi-side or phi-side generating function.
/// Rows with a zero scale are omitted.
DecompositionPlan build_plan(const FormParams& p, Side side);

/// True when every term lies in the Eisenstein basis of plan.space. For
/// weight 2 with trivial character the span condition sum c_d / d = 0 is
/// checked instead, since E_2 itself is not modular.
bool plan_in_span(const DecompositionPlan& plan);

/// Psi side: coefficient of q^m of the Eisenstein part; zero off m = a + 3b mod 8.
Rational alpha(const FormParams& p, std::uint64_t m);
/// Phi side coefficient.
Rational beta(const FormParams& p, std::uint64_t m);

/// Closed-form alpha_m through m = 2^{e2} 3^{e3} n_{2,3}. Throws
/// PreconditionViolation when m = 0 or m is outside the progression.
Rational alpha_factored(const FormParams& p, std::uint64_t m);

/// The printed vanishing condition of the closed forms: e3 = 0 together with
/// a = 0 (even cases), a = 1 with 2^{e2} n_{2,3} = 2 mod 3 (odd, a+b = 4k+2),
/// or a = 1 with n_{2,3} = 1 mod 3 (odd, a+b = 4k).
bool alpha_factored_vanishes(const FormParams& p, std::uint64_t m);

/// gamma (psi side) or gamma' (phi side) to precision P, by subtraction:
///   psi: Psi_8^a(z) Psi_8^b(3z) - E_psi,   phi: phi^a(z) phi^b(3z) - E_phi.
QSeries cusp_remainder(const FormParams& p, Side side, std::size_t precision);

/// cos(pi r / 4) for even r, exactly; throws PreconditionViolation for odd r.
int cos_quarter_pi(std::int64_t r);

/// Both plans of one (a, b), built once for repeated evaluation.
class Decomposition {
 public:
  explicit Decomposition(const FormParams& p);

  const FormParams& params() const noexcept { return params_; }
  const DecompositionPlan& plan(Side side) const noexcept { return side == Side::Psi ? psi_ : phi_; }

  Rational alpha(std::uint64_t m) const;
  Rational beta(std::uint64_t m) const;
  /// beta at a rational index: zero unless the index is a non-negative integer.
  Rational beta(const Rational& m) const;

 private:
  FormParams params_;
  DecompositionPlan psi_;
  DecompositionPlan phi_;
};

/// Perturbation of a single table row, for exercising the verifiers.
struct TableFault {
  ParityCase table;
  Side side;
  std::size_t row;
  Rational delta;  ///< added to the row's coefficient
};

/// Installs a fault for the lifetime of the guard; plans built meanwhile are
/// perturbed. Guards do not nest.
class ScopedTableFault {
 public:
  explicit ScopedTableFault(TableFault fault);
  ~ScopedTableFault();
  ScopedTableFault(const ScopedTableFault&) = delete;
  ScopedTableFault& operator=(const ScopedTableFault&) = delete;
};

std::optional<TableFault> active_table_fault();

}  // namespace trisq
