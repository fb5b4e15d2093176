#include <gtest/gtest.h>

#include <vector>

#include "icsrbf/kernel.hpp"
#include "icsrbf/polynomial.hpp"

using namespace icsrbf;

TEST(Polynomial, TrimsAndReportsDegree) {
  const Polynomial<double> p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_TRUE(Polynomial<double>{0.0}.is_zero());
  EXPECT_EQ(Polynomial<double>::monomial(3).coeff(3), 1.0);
  EXPECT_EQ(Polynomial<double>::monomial(3).coeff(7), 0.0);
}

TEST(Polynomial, ArithmeticAndCalculus) {
  const Polynomial<double> a{1.0, 1.0};   // 1 + r
  const Polynomial<double> b{-1.0, 1.0};  // -1 + r
  EXPECT_EQ(a * b, (Polynomial<double>{-1.0, 0.0, 1.0}));
  EXPECT_EQ(a + b, (Polynomial<double>{0.0, 2.0}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(2.0 * a, (Polynomial<double>{2.0, 2.0}));
  const Polynomial<double> c{3.0, 0.0, 6.0};
  EXPECT_EQ(c.derivative(), (Polynomial<double>{0.0, 12.0}));
  EXPECT_EQ(c.integral(), (Polynomial<double>{0.0, 3.0, 0.0, 2.0}));
  EXPECT_EQ(c.integral().derivative(), c);
  EXPECT_DOUBLE_EQ(c(2.0), 27.0);
}

TEST(Polynomial, ExactRationalsAndCast) {
  const RationalPolynomial p{Rational(1, 3), Rational(-1, 2)};
  EXPECT_EQ(p.integral()(Rational(1)), Rational(1, 3) - Rational(1, 4));
  const auto d = p.cast<double>([](const Rational& r) { return to_double(r); });
  EXPECT_NEAR(d(1.0), 1.0 / 3.0 - 0.5, 1e-16);
}

TEST(Horner, MatchesDirectEvaluation) {
  const std::vector<double> c{1.0, -2.0, 0.5, 3.0};
  const double x = 0.7;
  EXPECT_NEAR(horner(c, x), 1.0 - 2.0 * x + 0.5 * x * x + 3.0 * x * x * x, 1e-15);
  EXPECT_EQ(horner(std::vector<double>{}, 2.0), 0.0);
}
