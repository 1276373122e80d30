#include "trisq_cli/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trisq/counts.hpp"
#include "trisq/decomposition.hpp"
#include "trisq/errors.hpp"
#include "trisq/qseries.hpp"
#include "trisq/verify.hpp"

namespace trisq::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Csv, Json };

// Raised for inputs that parse but violate a documented constraint.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned a = 0;
  unsigned b = 0;
  std::string format = "csv";
  std::string output;
};

std::size_t default_precision(std::size_t fallback) {
  if (const char* env = std::getenv("TRISQ_PRECISION")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

std::string decimal12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Rows of string cells written as CSV (header first) or as a JSON object
// {"columns": [...], "rows": [[...], ...]}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os, Format f) const {
    if (f == Format::Csv) {
      write_line(os, columns);
      for (const auto& r : rows) write_line(os, r);
      return;
    }
    ordered_json j;
    j["columns"] = columns;
    j["rows"] = rows;
    os << j.dump(2) << '\n';
  }

 private:
  static void write_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  }
};

void require_pair(const Common& c) {
  if (c.a == 0 && c.b == 0) throw UsageError("-a/-b: (a, b) = (0, 0) is not allowed");
}

FormParams require_form(const Common& c) {
  if ((c.a + c.b) % 2 != 0) {
    throw UsageError("-a/-b: a+b must be even (got a+b=" + std::to_string(c.a + c.b) + ")");
  }
  if (c.a + c.b < 4) throw UsageError("-a/-b: a+b must be at least 4 (got a+b=" + std::to_string(c.a + c.b) + ")");
  return FormParams::make(c.a, c.b);
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-a", c.a, "number of unit-weight squares")->required();
  sub->add_option("-b", c.b, "number of squares weighted by 3")->required();
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", c.output, "write to this file instead of standard output");
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream os;
  const bool approx = !r.table.empty() && r.table.front().approx;
  os << "index,lhs,rhs" << (approx ? ",ratio_approx" : "") << '\n';
  for (const auto& row : r.table) {
    os << row.index << ',' << to_string(row.lhs) << ',' << to_string(row.rhs);
    if (approx) os << ',' << (row.approx ? decimal12(*row.approx) : "");
    os << '\n';
  }
  return os.str();
}

std::string status_line(const VerificationReport& r) {
  std::ostringstream os;
  os << r.claim << ": " << name(r.status);
  if (r.witness) os << " witness=" << *r.witness;
  for (const auto& [k, v] : r.summary) {
    os << ' ' << k << '=';
    std::visit([&](const auto& x) {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bool>) {
        os << (x ? "true" : "false");
      } else {
        os << x;
      }
    }, v);
  }
  for (const auto& n : r.notes) os << " [" << n << ']';
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation numbers of x1^2+...+xa^2 + 3(y1^2+...+yb^2) and their Eisenstein parts", "trisq"};
  app.require_subcommand(1);

  Common c;

  std::size_t precision = default_precision(64);
  std::string via = "theta";
  auto* expand = app.add_subcommand("expand", "q-expansions of phi^a(z)phi^b(3z) and Psi8^a(z)Psi8^b(3z)");
  add_common(expand, c);
  expand->add_option("--precision", precision, "number of coefficients");
  expand->add_option("--via", via, "theta products or eta quotients")->check(CLI::IsMember({"theta", "eta"}));

  std::uint64_t nmax = default_precision(64);
  bool progression = false;
  auto* counts = app.add_subcommand("counts", "N, N* and N~ by series extraction");
  add_common(counts, c);
  counts->add_option("--nmax", nmax, "largest index");
  counts->add_flag("--progression", progression, "index by n with m = 8n+a+3b");

  auto* eis = app.add_subcommand("eisenstein", "alpha, beta and the remainders gamma, gamma'");
  add_common(eis, c);
  eis->add_option("--nmax", nmax, "largest index");

  bool tilde = false;
  std::string constant_text;
  std::optional<std::uint64_t> depth;
  auto* vid = app.add_subcommand("verify-identity", "check N*(8n+a+3b) = c N(8n+a+3b) for n below a depth");
  add_common(vid, c);
  vid->add_flag("--tilde", tilde, "compare against N~ instead of N");
  vid->add_option("--constant", constant_text, "rational constant p/q (inferred when omitted)");
  vid->add_option("--depth", depth, "number of indices n (default: Sturm bound at level 768)");

  std::uint64_t rel_depth = 200;
  auto* vrel = app.add_subcommand("verify-relations", "exact relations among alpha and beta");
  add_common(vrel, c);
  vrel->add_option("--depth", rel_depth, "number of indices n");

  std::uint64_t ratio_nmax = 5000;
  std::string case_text;
  std::optional<unsigned> nu;
  double tolerance = 0.02;
  auto* ratio = app.add_subcommand("ratio", "empirical N*/N against its limit");
  add_common(ratio, c);
  ratio->add_option("--nmax", ratio_nmax, "largest n");
  ratio->add_option("--case", case_text, "i, ii or iii (default by a+3b mod 8)")
      ->check(CLI::IsMember({"i", "ii", "iii"}));
  ratio->add_option("--nu", nu, "2-adic valuation for case ii");
  ratio->add_option("--tolerance", tolerance, "allowed deviation over the top decile");

  std::size_t st_precision = default_precision(256);
  std::uint64_t st_depth = 100;
  std::string fault_text;
  auto* self = app.add_subcommand("selftest", "all invariant suites at reduced scale");
  self->add_option("--precision", st_precision, "series precision");
  self->add_option("--depth", st_depth, "identity depth");
  self->add_option("--inject-fault", fault_text, "CASE:SIDE:ROW[:DELTA]")->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  auto open_sink = [&] {
    if (c.output.empty()) return;
    file.open(c.output, std::ios::binary);
    if (!file) throw UsageError("--output: cannot open " + c.output);
    sink = &file;
  };
  const Format fmt = c.format == "json" ? Format::Json : Format::Csv;

  auto emit_report = [&](const VerificationReport& r) {
    if (fmt == Format::Json) {
      *sink << to_json(r) << '\n';
    } else {
      *sink << report_csv(r);
    }
    err << status_line(r) << '\n';
    return r.passed() ? kExitOk : kExitFailure;
  };

  try {
    if (app.got_subcommand(expand)) {
      require_pair(c);
      open_sink();
      QSeries theta;
      QSeries psi;
      if (via == "eta") {
        theta = eta_quotient_series(phi_product_eta_quotient(c.a, c.b), precision);
        psi = eta_quotient_series(psi8_product_eta_quotient(c.a, c.b), precision);
      } else {
        theta = count_series(c.a, c.b, Variant::All, precision);
        psi = Rational(1, 1) / Rational(ipow(Integer(2), c.a + c.b)) * count_series(c.a, c.b, Variant::Odd, precision);
      }
      Table t{{"n", "phi_product", "psi8_product"}, {}};
      for (std::size_t n = 0; n < precision; ++n) t.rows.push_back({std::to_string(n), to_string(theta[n]), to_string(psi[n])});
      t.write(*sink, fmt);
      return kExitOk;
    }

    if (app.got_subcommand(counts)) {
      require_pair(c);
      open_sink();
      const unsigned shift = c.a + 3 * c.b;
      const std::uint64_t top = progression ? 8 * nmax + shift : nmax;
      const RepresentationTable tab(c.a, c.b, top + 1);
      Table t;
      t.columns = progression ? std::vector<std::string>{"n", "m", "N", "N_star", "N_tilde"}
                              : std::vector<std::string>{"m", "N", "N_star", "N_tilde"};
      for (std::uint64_t n = 0; n <= nmax; ++n) {
        const std::uint64_t m = progression ? 8 * n + shift : n;
        const Rational mq{Integer(m)};
        std::vector<std::string> row;
        if (progression) row.push_back(std::to_string(n));
        row.push_back(std::to_string(m));
        row.push_back(to_string(tab.all(mq)));
        row.push_back(to_string(tab.odd(mq)));
        row.push_back(to_string(tab.tilde(mq)));
        t.rows.push_back(std::move(row));
      }
      t.write(*sink, fmt);
      return kExitOk;
    }

    if (app.got_subcommand(eis)) {
      const FormParams p = require_form(c);
      open_sink();
      const Decomposition dec(p);
      const QSeries gamma = cusp_remainder(p, Side::Psi, nmax + 1);
      const QSeries gamma_prime = cusp_remainder(p, Side::Phi, nmax + 1);
      Table t{{"n", "alpha", "beta", "gamma", "gamma_prime"}, {}};
      for (std::uint64_t n = 0; n <= nmax; ++n) {
        t.rows.push_back({std::to_string(n), to_string(dec.alpha(n)), to_string(dec.beta(n)), to_string(gamma[n]),
                          to_string(gamma_prime[n])});
      }
      t.write(*sink, fmt);
      return kExitOk;
    }

    if (app.got_subcommand(vid)) {
      if ((c.a + c.b) % 2 != 0) throw UsageError("-a/-b: a+b must be even");
      require_pair(c);
      if (tilde && (c.a + 3 * c.b) % 4 != 0) throw UsageError("--tilde: needs a+3b divisible by 4");
      if (depth && *depth == 0) throw UsageError("--depth: must be positive");
      ExactIdentityClaim claim{c.a, c.b, tilde, std::nullopt, depth};
      if (!constant_text.empty()) {
        try {
          claim.constant = parse_rational(constant_text);
        } catch (const std::invalid_argument&) {
          throw UsageError("--constant: not a rational number: " + constant_text);
        }
      }
      open_sink();
      return emit_report(check_exact_identity(claim));
    }

    if (app.got_subcommand(vrel)) {
      const FormParams p = require_form(c);
      open_sink();
      return emit_report(check_eisenstein_relations(p, rel_depth));
    }

    if (app.got_subcommand(ratio)) {
      require_form(c);
      if (c.a <= 1) throw UsageError("-a: ratio scans need a > 1");
      RatioLimit rl = default_ratio_limit(c.a, c.b, nu);
      if (case_text == "i") rl = {c.a, c.b, LimitCase::I, std::nullopt};
      if (case_text == "ii") rl = {c.a, c.b, LimitCase::II, nu.value_or(3)};
      if (case_text == "iii") rl = {c.a, c.b, LimitCase::III, std::nullopt};
      try {
        (void)limit_value(rl);
      } catch (const PreconditionViolation& e) {
        throw UsageError(std::string("--case: ") + e.what());
      }
      open_sink();
      return emit_report(check_ratio_convergence(rl, ratio_nmax, tolerance));
    }

    if (app.got_subcommand(self)) {
      std::optional<ScopedTableFault> guard;
      if (!fault_text.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(fault_text);
        for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
        if (parts.size() < 3 || parts.size() > 4) throw UsageError("--inject-fault: expected CASE:SIDE:ROW[:DELTA]");
        const std::vector<std::pair<std::string, ParityCase>> cases = {
            {"EE0", ParityCase::EE0}, {"OO2", ParityCase::OO2}, {"EE2", ParityCase::EE2}, {"OO0", ParityCase::OO0}};
        const auto it = std::ranges::find(cases, parts[0], &std::pair<std::string, ParityCase>::first);
        if (it == cases.end()) throw UsageError("--inject-fault: unknown table " + parts[0]);
        if (parts[1] != "psi" && parts[1] != "phi") throw UsageError("--inject-fault: side must be psi or phi");
        TableFault fault{it->second, parts[1] == "psi" ? Side::Psi : Side::Phi, 0, Rational(1, 7)};
        try {
          fault.row = std::stoul(parts[2]);
          if (parts.size() == 4) fault.delta = parse_rational(parts[3]);
        } catch (const std::exception&) {
          throw UsageError("--inject-fault: malformed row or delta");
        }
        guard.emplace(fault);
      }
      const auto results = run_selftest(st_precision, st_depth);
      bool all = true;
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.suite;
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
        all = all && r.passed;
      }
      return all ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace trisq::cli
