#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trisq/decomposition.hpp"
#include "trisq/numeric.hpp"

namespace trisq {

enum class Status { Verified, Counterexample, Inconclusive };

std::string_view name(Status s);

struct ReportRow {
  std::uint64_t index = 0;
  Rational lhs;
  Rational rhs;
  std::optional<double> approx;  ///< decimal ratio, ratio scans only
};

using ReportValue = std::variant<std::int64_t, std::string, bool>;
using ReportFields = std::vector<std::pair<std::string, ReportValue>>;

/// Outcome of one check. A counterexample always carries a witness index.
struct VerificationReport {
  std::string claim;
  ReportFields params;
  Status status = Status::Inconclusive;
  std::optional<std::uint64_t> witness;
  std::vector<ReportRow> table;
  ReportFields summary;
  std::vector<std::string> notes;

  bool passed() const noexcept { return status == Status::Verified; }
};

/// {claim, params, status, witness, table: [[index, lhs, rhs(, ratio)]]}
/// followed by optional summary and notes; rationals as "p/q" strings.
std::string to_json(const VerificationReport& report, int indent = 2);

// ---------------------------------------------------------------------------
// Exact identities N* = c N and N* = c~ N~

bool membership_S(unsigned a, unsigned b);
bool membership_Stilde(unsigned a, unsigned b);

/// 2 / (2 + C(a,4) + ab) when 1 <= a + 3b <= 8, otherwise the limit of
/// N*/N where it exists. Pairs (0, b) reduce to (b, 0), since both counts
/// vanish off 3 | n and N(0, b; 3m) = N(b, 0; m). Throws PreconditionViolation
/// when a + 3b = 0 mod 8 and no single limit exists.
Rational expected_constant(unsigned a, unsigned b);

/// Constant of N* = c~ N~ for 4 | a + 3b, with the same (0, b) reduction.
Rational expected_tilde_constant(unsigned a, unsigned b);

struct ExactIdentityClaim {
  unsigned a = 0;
  unsigned b = 0;
  bool tilde = false;
  std::optional<Rational> constant;     ///< nullopt: infer from the first usable index
  std::optional<std::uint64_t> depth;   ///< nullopt: Sturm bound at level 768
};

/// Default search depth: Sturm bound of weight (a+b)/2 at level 768.
std::uint64_t default_identity_depth(unsigned a, unsigned b);

/// Checks N*(8n+a+3b) = c N(8n+a+3b) (or N~) for n < depth. Throws
/// UnsupportedParams for odd a+b, PreconditionViolation for a tilde claim
/// with a + 3b != 0 mod 4, and DegenerateClaim when every denominator vanishes.
VerificationReport check_exact_identity(const ExactIdentityClaim& claim);

// ---------------------------------------------------------------------------
// Limits

/// delta(a, b, nu) for a + 3b = 0 mod 8 and nu >= 3.
Rational delta(unsigned a, unsigned b, unsigned nu);

enum class LimitCase { I, II, III };

std::string_view name(LimitCase c);

struct RatioLimit {
  unsigned a = 0;
  unsigned b = 0;
  LimitCase limit_case = LimitCase::I;
  std::optional<unsigned> nu;  ///< case II only
};

/// The case appropriate to N*/N for (a, b): I off a + 3b = 0 mod 8, else II.
RatioLimit default_ratio_limit(unsigned a, unsigned b, std::optional<unsigned> nu = std::nullopt);

/// Exact limit. Case I needs a+3b != 0 mod 8, case II a+3b = 0 mod 8 with
/// nu >= 3, case III 4 | a+3b; a+b must be even. Throws PreconditionViolation.
Rational limit_value(const RatioLimit& rl);

/// Empirical N*/N (N*/N~ in case III) over admissible n <= n_max. The status
/// is decided by the largest deviation over the top decile; the mean
/// deviation is reported alongside. Throws PreconditionViolation for a <= 1
/// and NoAdmissibleIndex when no usable index exists.
VerificationReport check_ratio_convergence(const RatioLimit& rl, std::uint64_t n_max, double tolerance = 0.02);

// ---------------------------------------------------------------------------
// Relations among alpha and beta

/// Exact alpha/beta relations for n < depth: the three forms keyed on
/// a + 3b mod 8 and mod 4, and the two parity-keyed forms.
VerificationReport check_eisenstein_relations(const FormParams& p, std::uint64_t depth);

/// beta_{(8n+a+3b)/4} against beta_{8n+a+3b} for n < depth; needs 4 | a+3b.
VerificationReport check_beta_quarter_relation(const FormParams& p, std::uint64_t depth);

// ---------------------------------------------------------------------------
// Growth

/// Least-squares slope of log|gamma'_m| and log|gamma_m| against log m over
/// m < P with the remainder nonzero (threshold (a+b-2)/4 + 0.35), and the
/// trend of n^{(a+b-1)/4} / |alpha_{8n+a+3b}| along n = 10 * 2^j <= P, which
/// passes when its own log-log slope is negative (strict monotonicity is
/// reported but not required: the values alternate with 8n+a+3b mod 3).
/// Throws PreconditionViolation for a <= 1.
VerificationReport growth_diagnostic(const FormParams& p, std::size_t precision);

/// Fitted slope of log|c_m| vs log m over nonzero c_m with m >= 1; nullopt
/// when fewer than two points qualify.
std::optional<double> loglog_slope(const QSeries& s);

// ---------------------------------------------------------------------------
// Self test

struct SuiteResult {
  std::string suite;
  bool passed = false;
  std::string detail;
};

/// Every module's invariant suite at reduced scale.
std::vector<SuiteResult> run_selftest(std::size_t precision = 256, std::uint64_t depth = 100);

}  // namespace trisq
