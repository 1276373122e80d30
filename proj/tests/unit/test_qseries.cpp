#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trisq/errors.hpp"
#include "trisq/qseries.hpp"

using namespace trisq;

namespace {

QSeries from(const std::vector<mpq_class>& v) { return QSeries(v); }

}  // namespace

TEST(Series, ArithmeticTruncatesToShorter) {
  const QSeries a = phi_series(10);
  const QSeries b = psi8_series(6);
  EXPECT_EQ((a + b).precision(), 6U);
  EXPECT_EQ((a * b).precision(), 6U);
  EXPECT_EQ((a - a).valuation(), 10U);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Series, ProductMatchesSchoolbook) {
  const QSeries a = phi_series(60);
  const QSeries b = euler_product(60);
  const QSeries c = a * b;
  for (std::size_t n = 0; n < 60; ++n) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += a[i] * b[n - i];
    EXPECT_EQ(c[n], acc);
  }
}

TEST(Series, PowerAndInverse) {
  const QSeries e = euler_product(200);
  EXPECT_EQ(pow(e, 3), e * e * e);
  EXPECT_EQ(pow(e, 0), QSeries::one(200));
  EXPECT_EQ(e * inverse(e), QSeries::one(200));
  EXPECT_THROW(inverse(QSeries(std::vector<Rational>{2, 1})), PreconditionViolation);
}

TEST(Series, Dilate) {
  const QSeries d = dilate(phi_series(50), 3);
  EXPECT_EQ(d[0], 1);
  EXPECT_EQ(d[3], 2);
  EXPECT_EQ(d[12], 2);
  EXPECT_EQ(d[4], 0);
  EXPECT_THROW(dilate(d, 0), PreconditionViolation);
}

TEST(Series, ThetaCoefficients) {
  const QSeries phi = phi_series(30);
  const QSeries psi = psi8_series(30);
  for (std::size_t n = 0; n < 30; ++n) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    const bool square = r * r == n;
    EXPECT_EQ(phi[n], square ? (n == 0 ? 1 : 2) : 0);
    EXPECT_EQ(psi[n], (square && r % 2 == 1) ? 1 : 0);
  }
}

TEST(Series, EulerProductMatchesNaiveProduct) {
  QSeries naive = QSeries::one(300);
  for (std::size_t m = 1; m < 300; ++m) {
    QSeries factor = QSeries::one(300);
    factor[m] = -1;
    naive = naive * factor;
  }
  EXPECT_EQ(euler_product(300), naive);
  QSeries q(300);
  q[1] = 1;
  EXPECT_EQ(dilate(euler_product(300), 24) * q, from(oracle::eta_product({{24, 1}}, 300)));
}

TEST(EtaQuotient, PhiIdentityToFiveHundred) {
  EXPECT_EQ(eta_quotient_series(phi_eta_quotient(), 500), phi_series(500));
}

TEST(EtaQuotient, ThetaProductsToFiveHundred) {
  for (const auto& [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {0, 1}, {1, 1}, {4, 0}, {2, 2}, {3, 1}}) {
    const QSeries psi_prod = pow(psi8_series(500), a) * pow(dilate(psi8_series(500), 3), b);
    EXPECT_EQ(eta_quotient_series(psi8_product_eta_quotient(a, b), 500), psi_prod) << a << "," << b;
    const QSeries phi_prod = pow(phi_series(500), a) * pow(dilate(phi_series(500), 3), b);
    EXPECT_EQ(eta_quotient_series(phi_product_eta_quotient(a, b), 500), phi_prod) << a << "," << b;
  }
}

TEST(EtaQuotient, MatchesNaiveExpansion) {
  const EtaQuotient eq = psi8_product_eta_quotient(2, 1);
  std::vector<std::pair<unsigned, int>> factors;
  for (const auto& f : eq.factors) factors.emplace_back(static_cast<unsigned>(f.dilation), f.exponent);
  EXPECT_EQ(eta_quotient_series(eq, 200), from(oracle::eta_product(factors, 200)));
}

TEST(EtaQuotient, RejectsFractionalLeadingPower) {
  EXPECT_THROW((eta_quotient_series(EtaQuotient{{{1, 1}}}, 10)), FractionalValuation);
  EXPECT_EQ((EtaQuotient{{{1, 1}}}.leading_exponent()), Rational(1, 24));
}

TEST(Series, IntegerAndRationalAgree) {
  const ZSeries z = pow(phi_series<Integer>(100), 5);
  EXPECT_EQ(z.cast<Rational>(), pow(phi_series(100), 5));
}
