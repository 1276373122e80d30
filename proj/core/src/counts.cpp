#include "trisq/counts.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trisq/errors.hpp"

namespace trisq {

namespace {

void require_nontrivial(unsigned a, unsigned b) {
  if (a == 0 && b == 0) throw PreconditionViolation("(a, b) = (0, 0) has no representations");
}

// Index as a non-negative integer, or nullopt for negative/fractional.
std::optional<std::uint64_t> natural_index(const Rational& raw) {
  const Rational x = canonical(raw);
  if (x.get_den() != 1 || x < 0) return std::nullopt;
  if (!x.get_num().fits_ulong_p()) throw std::out_of_range("index too large");
  return x.get_num().get_ui();
}

ZSeries theta_product(const ZSeries& base, unsigned a, unsigned b) {
  const std::size_t p = base.precision();
  ZSeries out = ZSeries::one(p);
  const ZSeries base3 = dilate(base, 3);
  for (unsigned i = 0; i < a; ++i) out = out * base;
  for (unsigned j = 0; j < b; ++j) out = out * base3;
  return out;
}

}  // namespace

ZSeries count_series_z(unsigned a, unsigned b, Variant variant, std::size_t precision) {
  require_nontrivial(a, b);
  switch (variant) {
    case Variant::All:
      return theta_product(phi_series<Integer>(precision), a, b);
    case Variant::Odd: {
      const Integer scale = ipow(Integer(2), a + b);
      return scale * theta_product(psi8_series<Integer>(precision), a, b);
    }
    case Variant::Tilde: {
      const ZSeries g = theta_product(phi_series<Integer>(precision), a, b);
      return g - dilate(g, 4);
    }
  }
  throw PreconditionViolation("unknown variant");
}

QSeries count_series(unsigned a, unsigned b, Variant variant, std::size_t precision) {
  return count_series_z(a, b, variant, precision).cast<Rational>();
}

Integer count(unsigned a, unsigned b, std::int64_t n, Variant variant) {
  require_nontrivial(a, b);
  if (n < 0) return 0;
  const auto m = static_cast<std::size_t>(n);
  return count_series_z(a, b, variant, m + 1)[m];
}

Integer count(unsigned a, unsigned b, const Rational& x, Variant variant) {
  require_nontrivial(a, b);
  const auto m = natural_index(x);
  if (!m) return 0;
  return count(a, b, static_cast<std::int64_t>(*m), variant);
}

Integer count_by_enumeration(unsigned a, unsigned b, std::int64_t n, Variant variant) {
  require_nontrivial(a, b);
  if (n < 0) return 0;
  if (variant == Variant::Tilde) {
    Integer quarter = (n % 4 == 0) ? count_by_enumeration(a, b, n / 4, Variant::All) : Integer(0);
    return count_by_enumeration(a, b, n, Variant::All) - quarter;
  }
  const bool odd_only = variant == Variant::Odd;
  const unsigned dims = a + b;
  std::map<std::pair<unsigned, std::int64_t>, Integer> memo;

  // Coordinates 0..a-1 carry weight 1, the rest weight 3.
  auto rec = [&](auto&& self, unsigned i, std::int64_t rem) -> Integer {
    if (i == dims) return rem == 0 ? Integer(1) : Integer(0);
    const auto key = std::pair{i, rem};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::int64_t w = i < a ? 1 : 3;
    Integer total = 0;
    for (std::int64_t x = 0; w * x * x <= rem; ++x) {
      if (odd_only && x % 2 == 0) continue;
      const Integer sub = self(self, i + 1, rem - w * x * x);
      total += (x == 0) ? sub : Integer(2 * sub);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, 0, n);
}

Integer triangular_count(unsigned a, unsigned b, std::int64_t n) {
  require_nontrivial(a, b);
  if (n < 0) return 0;
  const auto limit = static_cast<std::size_t>(n);
  // Each triangular value t = m(m-1)/2 (m >= 1) is hit by x = m and x = 1 - m.
  std::vector<Integer> one_var(limit + 1, 0);
  for (std::size_t m = 1; m * (m - 1) / 2 <= limit; ++m) one_var[m * (m - 1) / 2] += 2;

  std::vector<Integer> ways(limit + 1, 0);
  ways[0] = 1;
  auto absorb = [&](std::size_t weight) {
    std::vector<Integer> next(limit + 1, 0);
    for (std::size_t s = 0; s <= limit; ++s) {
      if (ways[s] == 0) continue;
      for (std::size_t t = 0; s + weight * t <= limit; ++t) {
        if (one_var[t] != 0) next[s + weight * t] += ways[s] * one_var[t];
      }
    }
    ways = std::move(next);
  };
  for (unsigned i = 0; i < a; ++i) absorb(1);
  for (unsigned j = 0; j < b; ++j) absorb(3);
  return ways[limit];
}

RepresentationTable::RepresentationTable(unsigned a, unsigned b, std::size_t precision)
    : a_(a),
      b_(b),
      all_(count_series_z(a, b, Variant::All, precision)),
      odd_(count_series_z(a, b, Variant::Odd, precision)) {}

Integer RepresentationTable::all(const Rational& m) const {
  const auto idx = natural_index(m);
  if (!idx) return 0;
  if (*idx >= all_.precision()) throw std::out_of_range("RepresentationTable: index past precision");
  return all_[*idx];
}

Integer RepresentationTable::odd(const Rational& m) const {
  const auto idx = natural_index(m);
  if (!idx) return 0;
  if (*idx >= odd_.precision()) throw std::out_of_range("RepresentationTable: index past precision");
  return odd_[*idx];
}

Integer RepresentationTable::tilde(const Rational& m) const {
  Rational quarter = m / 4;
  quarter.canonicalize();
  return all(m) - all(quarter);
}

Integer RepresentationTable::get(Variant v, const Rational& m) const {
  switch (v) {
    case Variant::All: return all(m);
    case Variant::Odd: return odd(m);
    case Variant::Tilde: return tilde(m);
  }
  return 0;
}

}  // namespace trisq
