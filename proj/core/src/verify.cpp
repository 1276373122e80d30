#include "trisq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "trisq/counts.hpp"
#include "trisq/divisor.hpp"
#include "trisq/eisenstein.hpp"
#include "trisq/errors.hpp"

namespace trisq {

namespace {

void require_even_sum(unsigned a, unsigned b) {
  if ((a + b) % 2 != 0) throw UnsupportedParams("a+b must be even");
  if (a + b == 0) throw PreconditionViolation("(a, b) = (0, 0)");
}

Integer binom4(unsigned a) {
  if (a < 4) return 0;
  Integer n = a;
  return n * (n - 1) * (n - 2) * (n - 3) / 24;
}

// sum_{j=lo}^{hi} (-1)^{bj} 2^{jh}
Integer signed_geometric(unsigned b, unsigned h, unsigned lo, unsigned hi) {
  Integer acc = 0;
  for (unsigned j = lo; j <= hi; ++j) acc += sign_power(static_cast<long long>(b) * j) * ipow(Integer(2), j * h);
  return acc;
}

// 2^{s-2} + (-1)^b 2^{(s-2)/2} cos(pi (a+3b)/4), s = a + b >= 2.
Integer limit_base(unsigned a, unsigned b) {
  const unsigned s = a + b;
  const unsigned h = (s - 2) / 2;
  return ipow(Integer(2), s - 2) + sign_power(b) * ipow(Integer(2), h) * cos_quarter_pi(a + 3 * b);
}

Integer limit_base_no_cos(unsigned a, unsigned b) {
  const unsigned s = a + b;
  return ipow(Integer(2), s - 2) + sign_power(b) * ipow(Integer(2), (s - 2) / 2);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ReportFields pair_params(unsigned a, unsigned b) {
  return {{"a", static_cast<std::int64_t>(a)}, {"b", static_cast<std::int64_t>(b)}};
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Least-squares slope of y against x; nullopt for fewer than two distinct x.
std::optional<double> fit_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

std::string_view name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Counterexample: return "counterexample";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view name(LimitCase c) {
  switch (c) {
    case LimitCase::I: return "i";
    case LimitCase::II: return "ii";
    case LimitCase::III: return "iii";
  }
  return "?";
}

bool membership_S(unsigned a, unsigned b) {
  static constexpr std::pair<unsigned, unsigned> kS[] = {{0, 2}, {0, 4}, {0, 6}, {1, 1}, {1, 3},
                                                         {2, 0}, {3, 1}, {4, 0}, {6, 0}};
  return std::ranges::find(kS, std::pair{a, b}) != std::end(kS);
}

bool membership_Stilde(unsigned a, unsigned b) {
  static constexpr std::pair<unsigned, unsigned> kSt[] = {{0, 4}, {0, 8}, {1, 1}, {1, 5},
                                                          {2, 2}, {4, 0}, {5, 1}, {8, 0}};
  return std::ranges::find(kSt, std::pair{a, b}) != std::end(kSt);
}

Rational expected_constant(unsigned a, unsigned b) {
  require_even_sum(a, b);
  if (a == 0) return expected_constant(b, 0);
  const unsigned shift = a + 3 * b;
  if (shift >= 1 && shift <= 8) return ratio(2, 2 + binom4(a) + Integer(a) * b);
  if (shift % 8 == 0) throw PreconditionViolation("N*/N has no single limit when a+3b = 0 mod 8");
  return limit_value({a, b, LimitCase::I, std::nullopt});
}

Rational expected_tilde_constant(unsigned a, unsigned b) {
  require_even_sum(a, b);
  if ((a + 3 * b) % 4 != 0) throw PreconditionViolation("tilde constant needs a+3b = 0 mod 4");
  if (a == 0) return expected_tilde_constant(b, 0);
  if (a + 3 * b == 8) return ratio(2, 2 + binom4(a) + Integer(a) * b);
  return limit_value({a, b, LimitCase::III, std::nullopt});
}

std::uint64_t default_identity_depth(unsigned a, unsigned b) {
  require_even_sum(a, b);
  return sturm_bound(SpaceSignature{(a + b) / 2, kRestrictedLevel, Character::One});
}

VerificationReport check_exact_identity(const ExactIdentityClaim& claim) {
  const unsigned a = claim.a;
  const unsigned b = claim.b;
  require_even_sum(a, b);
  const unsigned shift = a + 3 * b;
  if (claim.tilde && shift % 4 != 0) throw PreconditionViolation("tilde claims need a+3b = 0 mod 4");
  const std::uint64_t sturm = default_identity_depth(a, b);
  const std::uint64_t depth = claim.depth.value_or(sturm);
  if (depth == 0) throw PreconditionViolation("depth must be positive");

  const RepresentationTable table(a, b, 8 * (depth - 1) + shift + 1);
  const Variant den_variant = claim.tilde ? Variant::Tilde : Variant::All;

  std::vector<Integer> lhs(depth);
  std::vector<Integer> den(depth);
  for (std::uint64_t n = 0; n < depth; ++n) {
    const Rational m(Integer(8 * n + shift));
    lhs[n] = table.odd(m);
    den[n] = table.get(den_variant, m);
  }

  Rational c;
  bool inferred = false;
  if (claim.constant) {
    c = *claim.constant;
  } else {
    const auto it = std::ranges::find_if(den, [](const Integer& d) { return d != 0; });
    if (it == den.end()) throw DegenerateClaim("every denominator vanishes below the depth");
    const auto i = static_cast<std::size_t>(it - den.begin());
    c = ratio(lhs[i], den[i]);
    inferred = true;
  }
  if (std::ranges::all_of(den, [](const Integer& d) { return d == 0; })) {
    throw DegenerateClaim("every denominator vanishes below the depth");
  }

  VerificationReport report;
  report.claim = claim.tilde ? "exact-identity-tilde" : "exact-identity";
  report.params = pair_params(a, b);
  report.params.emplace_back("tilde", claim.tilde);
  report.params.emplace_back("depth", static_cast<std::int64_t>(depth));
  report.status = Status::Verified;
  for (std::uint64_t n = 0; n < depth; ++n) {
    const Rational rhs = c * Rational(den[n]);
    report.table.push_back({n, Rational(lhs[n]), rhs, std::nullopt});
    if (Rational(lhs[n]) != rhs && !report.witness) {
      report.status = Status::Counterexample;
      report.witness = n;
    }
  }

  report.summary = {{"constant", to_string(c)},
                    {"constant_inferred", inferred},
                    {"sturm_bound", static_cast<std::int64_t>(sturm)}};
  const bool listed = claim.tilde ? membership_Stilde(a, b) : membership_S(a, b);
  if (report.passed() && !listed && depth >= sturm) {
    report.notes.emplace_back("identity appears exact; contradicts expectation");
  }
  if (!report.passed() && listed) report.notes.emplace_back("counterexample for a listed pair");
  if (report.passed() && depth < sturm) report.notes.emplace_back("depth below the Sturm bound");
  return report;
}

Rational delta(unsigned a, unsigned b, unsigned nu) {
  require_even_sum(a, b);
  if ((a + 3 * b) % 8 != 0) throw PreconditionViolation("delta needs a+3b = 0 mod 8");
  if (nu < 3) throw PreconditionViolation("delta needs nu >= 3");
  const unsigned h = (a + b - 2) / 2;
  const Integer num = signed_geometric(b, h, nu - 1, nu);
  const Integer den = -2 + signed_geometric(b, h, 0, nu);
  if (den == 0) throw PreconditionViolation("delta denominator vanishes");
  return ratio(num, den);
}

RatioLimit default_ratio_limit(unsigned a, unsigned b, std::optional<unsigned> nu) {
  if ((a + 3 * b) % 8 == 0) return {a, b, LimitCase::II, nu.value_or(3)};
  return {a, b, LimitCase::I, std::nullopt};
}

Rational limit_value(const RatioLimit& rl) {
  const unsigned a = rl.a;
  const unsigned b = rl.b;
  if ((a + b) % 2 != 0 || a + b < 2) throw PreconditionViolation("limit needs a+b even and at least 2");
  const unsigned shift = a + 3 * b;
  Rational value;
  switch (rl.limit_case) {
    case LimitCase::I:
      if (shift % 8 == 0) throw PreconditionViolation("case i needs a+3b != 0 mod 8");
      value = ratio(2, limit_base(a, b) + 1);
      break;
    case LimitCase::II: {
      if (shift % 8 != 0) throw PreconditionViolation("case ii needs a+3b = 0 mod 8");
      if (!rl.nu || *rl.nu < 3) throw PreconditionViolation("case ii needs nu >= 3");
      value = Rational(2) * delta(a, b, *rl.nu) / Rational(limit_base_no_cos(a, b));
      break;
    }
    case LimitCase::III: {
      if (shift % 4 != 0) throw PreconditionViolation("case iii needs a+3b = 0 mod 4");
      const Integer base = limit_base(a, b);
      if (base == 0) throw PreconditionViolation("case iii denominator vanishes");
      value = ratio(2, base);
      break;
    }
  }
  value.canonicalize();
  return value;
}

VerificationReport check_ratio_convergence(const RatioLimit& rl, std::uint64_t n_max, double tolerance) {
  if (rl.a <= 1) throw PreconditionViolation("ratio convergence needs a > 1");
  const FormParams p = FormParams::make(rl.a, rl.b);
  const Rational limit = limit_value(rl);
  const unsigned shift = p.shift();

  std::vector<std::uint64_t> indices;
  if (rl.limit_case == LimitCase::II) {
    const std::uint64_t step = std::uint64_t{1} << *rl.nu;
    for (std::uint64_t t = 1;; t += 2) {
      const std::uint64_t m = step * t;
      if (m < shift) continue;
      const std::uint64_t n = (m - shift) / 8;
      if (n > n_max) break;
      indices.push_back(n);
    }
  } else {
    indices.resize(n_max + 1);
    std::iota(indices.begin(), indices.end(), std::uint64_t{0});
  }

  const RepresentationTable table(p.a, p.b, 8 * n_max + shift + 1);
  const Variant den_variant = rl.limit_case == LimitCase::III ? Variant::Tilde : Variant::All;

  VerificationReport report;
  report.claim = "ratio-convergence";
  report.params = pair_params(p.a, p.b);
  report.params.emplace_back("case", std::string(name(rl.limit_case)));
  if (rl.nu) report.params.emplace_back("nu", static_cast<std::int64_t>(*rl.nu));
  report.params.emplace_back("n_max", static_cast<std::int64_t>(n_max));
  report.params.emplace_back("tolerance", format_double(tolerance));

  std::vector<Rational> ratios;
  for (const std::uint64_t n : indices) {
    const Rational m(Integer(8 * n + shift));
    const Integer num = table.odd(m);
    const Integer den = table.get(den_variant, m);
    if (den == 0) continue;
    Rational r = ratio(num, den);
    report.table.push_back({n, Rational(num), Rational(den), r.get_d()});
    ratios.push_back(std::move(r));
  }
  if (ratios.empty()) throw NoAdmissibleIndex("no admissible index with a nonzero denominator");

  const std::size_t top = std::max<std::size_t>(1, (ratios.size() + 9) / 10);
  double max_dev = 0.0;
  double sum_dev = 0.0;
  std::uint64_t worst = 0;
  for (std::size_t i = ratios.size() - top; i < ratios.size(); ++i) {
    Rational diff = ratios[i] - limit;
    const double dev = std::fabs(diff.get_d());
    sum_dev += dev;
    if (dev >= max_dev) {
      max_dev = dev;
      worst = report.table[i].index;
    }
  }
  const double mean_dev = sum_dev / static_cast<double>(top);

  report.status = max_dev <= tolerance ? Status::Verified : Status::Inconclusive;
  if (!report.passed()) report.witness = worst;
  report.summary = {{"limit", to_string(limit)},
                    {"limit_decimal", format_double(limit.get_d())},
                    {"admissible", static_cast<std::int64_t>(ratios.size())},
                    {"top_decile", static_cast<std::int64_t>(top)},
                    {"max_deviation", format_double(max_dev)},
                    {"mean_deviation", format_double(mean_dev)}};
  return report;
}

VerificationReport check_eisenstein_relations(const FormParams& p, std::uint64_t depth) {
  const Decomposition dec(p);
  const unsigned a = p.a;
  const unsigned b = p.b;
  const unsigned s = p.sum();
  const unsigned shift = p.shift();
  const Rational two_s(ipow(Integer(2), s));
  const Rational base(limit_base(a, b));
  const Rational base_plain(limit_base_no_cos(a, b));
  const Rational base_parity(ipow(Integer(2), s - 2) + 1);
  const bool parity_first = p.parity_case == ParityCase::EE2 || p.parity_case == ParityCase::OO0;

  VerificationReport report;
  report.claim = "eisenstein-relations";
  report.params = pair_params(a, b);
  report.params.emplace_back("depth", static_cast<std::int64_t>(depth));
  report.status = Status::Verified;

  std::vector<std::string> checked;
  auto record = [&](std::string_view label, std::uint64_t n, const Rational& lhs, const Rational& rhs) {
    if (std::ranges::find(checked, label) == checked.end()) checked.emplace_back(label);
    report.table.push_back({n, lhs, rhs, std::nullopt});
    if (lhs != rhs && !report.witness) {
      report.status = Status::Counterexample;
      report.witness = n;
      report.notes.emplace_back("first failure in relation " + std::string(label));
    }
  };

  for (std::uint64_t n = 0; n < depth; ++n) {
    const std::uint64_t m = 8 * n + shift;
    const Rational al = dec.alpha(m);
    const Rational be = dec.beta(m);
    if (shift % 8 != 0) {
      record("i", n, al * two_s * (base + 1), 2 * be);
    } else {
      record("ii", n, al * two_s * base_plain, Rational(2) * delta(a, b, valuation2(m)) * be);
    }
    if (shift % 4 == 0) {
      const Rational diff = be - dec.beta(m / 4);
      record("iii", n, al * two_s * base, 2 * diff);
      record("parity-ii", n, al * two_s * base, 2 * diff);
    }
    if (parity_first) record("parity-i", n, al * two_s * base_parity, 2 * be);
  }
  std::string joined;
  for (const auto& c : checked) joined += (joined.empty() ? "" : ",") + c;
  report.summary = {{"relations", joined}};
  return report;
}

VerificationReport check_beta_quarter_relation(const FormParams& p, std::uint64_t depth) {
  const unsigned shift = p.shift();
  if (shift % 4 != 0) throw PreconditionViolation("quarter relation needs a+3b = 0 mod 4");
  const Decomposition dec(p);
  const unsigned h = (p.sum() - 2) / 2;
  const Rational base(limit_base(p.a, p.b));

  VerificationReport report;
  report.claim = "beta-quarter-relation";
  report.params = pair_params(p.a, p.b);
  report.params.emplace_back("depth", static_cast<std::int64_t>(depth));
  report.status = Status::Verified;
  for (std::uint64_t n = 0; n < depth; ++n) {
    const std::uint64_t m = 8 * n + shift;
    const Rational bm = dec.beta(m);
    const Rational bq = dec.beta(m / 4);
    Rational lhs;
    Rational rhs;
    if (shift % 8 == 4) {
      lhs = bq * (base + 1);
      rhs = bm;
    } else {
      const unsigned nu = valuation2(m);
      lhs = bq * Rational(-2 + signed_geometric(p.b, h, 0, nu));
      rhs = Rational(-2 + signed_geometric(p.b, h, 0, nu - 2)) * bm;
    }
    report.table.push_back({n, lhs, rhs, std::nullopt});
    if (lhs != rhs && !report.witness) {
      report.status = Status::Counterexample;
      report.witness = n;
    }
  }
  return report;
}

std::optional<double> loglog_slope(const QSeries& s) {
  std::vector<std::pair<double, double>> points;
  for (std::size_t m = 1; m < s.precision(); ++m) {
    if (s[m] == 0) continue;
    points.emplace_back(std::log(static_cast<double>(m)), std::log(std::fabs(s[m].get_d())));
  }
  return fit_slope(points);
}

VerificationReport growth_diagnostic(const FormParams& p, std::size_t precision) {
  if (p.a <= 1) throw PreconditionViolation("growth diagnostic needs a > 1");
  const double threshold = (static_cast<double>(p.sum()) - 2.0) / 4.0 + 0.35;
  const auto slope_phi = loglog_slope(cusp_remainder(p, Side::Phi, precision));
  const auto slope_psi = loglog_slope(cusp_remainder(p, Side::Psi, precision));
  const bool bound_ok = (!slope_phi || *slope_phi <= threshold) && (!slope_psi || *slope_psi <= threshold);

  VerificationReport report;
  report.claim = "growth";
  report.params = pair_params(p.a, p.b);
  report.params.emplace_back("precision", static_cast<std::int64_t>(precision));

  const Decomposition dec(p);
  const double exponent = (static_cast<double>(p.sum()) - 1.0) / 4.0;
  bool strict = true;
  bool finite = true;
  std::vector<std::pair<double, double>> points;
  for (std::uint64_t n = 10; n <= precision; n *= 2) {
    const std::uint64_t m = 8 * n + p.shift();
    const Rational al = dec.alpha(m);
    const double magnitude = std::fabs(al.get_d());
    const double value = magnitude == 0 ? INFINITY : std::pow(static_cast<double>(n), exponent) / magnitude;
    if (!report.table.empty() && !(value < *report.table.back().approx)) strict = false;
    if (magnitude == 0) {
      finite = false;
      if (!report.witness) report.witness = n;
    } else {
      points.emplace_back(std::log(static_cast<double>(n)), std::log(value));
    }
    report.table.push_back({n, al, dec.beta(m), value});
  }
  const std::optional<double> trend_slope = fit_slope(points);
  const bool trend_ok = finite && trend_slope && *trend_slope < 0;

  report.status = bound_ok && trend_ok ? Status::Verified : Status::Inconclusive;
  auto slope_text = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("undefined"); };
  report.summary = {{"slope_gamma_prime", slope_text(slope_phi)},
                    {"slope_gamma", slope_text(slope_psi)},
                    {"slope_threshold", format_double(threshold)},
                    {"alpha_trend_slope", slope_text(trend_slope)},
                    {"alpha_trend_strictly_decreasing", strict}};
  if (!slope_phi && !slope_psi) report.notes.emplace_back("remainders vanish identically; degenerate pass");
  return report;
}

}  // namespace trisq
