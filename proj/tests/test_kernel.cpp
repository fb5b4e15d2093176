#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <iomanip>
#include <cmath>
#include <random>
#include <vector>

#include "icsrbf/kernel.hpp"
#include "icsrbf/quadrature.hpp"

using namespace icsrbf;

namespace {

RationalPolynomial binomial_power(int n) {
  RationalPolynomial out = RationalPolynomial::constant(Rational(1));
  for (int i = 0; i < n; ++i) out = out * RationalPolynomial{Rational(1), Rational(-1)};
  return out;
}

// (1-r)^e * factor, rescaled to value 1 at r = 0.
RationalPolynomial normalized_closed_form(int e, std::vector<long> factor_ascending) {
  std::vector<Rational> c;
  for (long v : factor_ascending) c.emplace_back(v);
  RationalPolynomial p = binomial_power(e) * RationalPolynomial(c);
  return (Rational(1) / p(Rational(0))) * p;
}

double five_point_d1(const ScaledKernel& k, double x, double h) {
  return (-k(x + 2 * h) + 8 * k(x + h) - 8 * k(x - h) + k(x - 2 * h)) / (12 * h);
}

double five_point_d2(const ScaledKernel& k, double x, double h) {
  return (-k(x + 2 * h) + 16 * k(x + h) - 30 * k(x) + 16 * k(x - h) - k(x - 2 * h)) / (12 * h * h);
}

}  // namespace

TEST(TruncatedPower, BinomialCoefficients) {
  EXPECT_EQ(truncated_power(2), (RationalPolynomial{Rational(1), Rational(-2), Rational(1)}));
  EXPECT_EQ(truncated_power(4),
            (RationalPolynomial{Rational(1), Rational(-4), Rational(6), Rational(-4), Rational(1)}));
  EXPECT_EQ(truncated_power(5)(Rational(1)), Rational(0));
}

TEST(TruncatedPower, RejectsNonPositiveExponent) {
  EXPECT_THROW(truncated_power(0), InvalidParameter);
  EXPECT_THROW(truncated_power(-3), InvalidParameter);
}

TEST(Montee, MatchesIntegrationByPartsClosedForm) {
  // (1/((l+1)(l+2))) (1-r)^{l+1} [(l+1) r + 1] with l = 2
  const RationalPolynomial expected =
      Rational(1, 12) * (binomial_power(3) * RationalPolynomial{Rational(1), Rational(3)});
  EXPECT_EQ(montee(truncated_power(2)), expected);
}

TEST(Montee, ZeroAndSupportEdge) {
  EXPECT_TRUE(montee(RationalPolynomial{}).is_zero());
  for (int l = 1; l <= 8; ++l) EXPECT_EQ(montee(truncated_power(l))(Rational(1)), Rational(0)) << l;
  const RationalPolynomial arbitrary{Rational(3), Rational(-7, 2), Rational(11)};
  EXPECT_EQ(montee(arbitrary)(Rational(1)), Rational(0));
}

TEST(Wendland, MatchesClosedFormsUpToPositiveScale) {
  struct Row {
    int k;
    int exponent;
    std::vector<long> factor;
  };
  const std::vector<Row> rows = {
      {0, 2, {1}},
      {1, 4, {1, 4}},
      {2, 6, {3, 18, 35}},
      {3, 8, {1, 8, 25, 32}},
      {4, 10, {5, 50, 210, 450, 429}},
      {5, 12, {9, 108, 566, 1644, 2697, 2048}},
  };
  for (const auto& row : rows) {
    const auto& kernel = wendland(3, row.k);
    EXPECT_EQ(kernel.exact_polynomial(), normalized_closed_form(row.exponent, row.factor)) << "k=" << row.k;
  }
}

TEST(Wendland, NormalizedExamples) {
  EXPECT_EQ(wendland(3, 1).exact_polynomial(), normalized_closed_form(4, {1, 4}));
  EXPECT_DOUBLE_EQ(wendland(3, 0)(0.5), 0.25);
  EXPECT_EQ(wendland(3, 3).l(), 5);
  EXPECT_EQ(&default_kernel(), &wendland(3, 3));
}

TEST(Wendland, StructuralInvariants) {
  for (int s = 1; s <= 5; ++s) {
    for (int k = 0; k <= 5; ++k) {
      const auto& kernel = wendland(s, k);
      const auto& p = kernel.exact_polynomial();
      EXPECT_EQ(kernel.degree(), static_cast<std::size_t>(s / 2 + 3 * k + 1)) << s << "," << k;
      EXPECT_EQ(p(Rational(0)), Rational(1));
      RationalPolynomial d = p;
      for (int order = 0; order <= 2 * k; ++order) {
        EXPECT_EQ(d(Rational(1)), Rational(0)) << "s=" << s << " k=" << k << " order=" << order;
        d = d.derivative();
      }
      EXPECT_EQ(kernel(1.0), 0.0);
      EXPECT_EQ(kernel(1.5), 0.0);
    }
  }
}

TEST(Wendland, MemoizedPerPair) {
  EXPECT_EQ(&wendland(3, 2), &wendland(3, 2));
  EXPECT_NE(&wendland(3, 2), &wendland(2, 2));
  EXPECT_THROW(wendland(0, 1), InvalidParameter);
  EXPECT_THROW(wendland(3, -1), InvalidParameter);
}

TEST(ScaledKernel, Examples) {
  const ScaledKernel k33(wendland(3, 3), 1.0, 0.0);
  EXPECT_DOUBLE_EQ(k33.eval(0.0, 0), 1.0);
  for (int d = 0; d <= 2; ++d) {
    EXPECT_EQ(k33.eval(2.0, d), 0.0);
    EXPECT_EQ(k33.eval(-2.0, d), 0.0);
  }
  const ScaledKernel k31(wendland(3, 1), 2.0, 0.0);
  EXPECT_NEAR(k31.eval(1.0, 0), 0.1875, 1e-15);
  EXPECT_EQ(k33.eval(0.0, 1), 0.0);
}

TEST(ScaledKernel, SmoothnessBound) {
  const ScaledKernel k30(wendland(3, 0), 1.0, 0.0);
  EXPECT_THROW(k30.eval(0.3, 1), SmoothnessError);
  const ScaledKernel k31(wendland(3, 1), 1.0, 0.0);
  EXPECT_NO_THROW(k31.eval(0.3, 2));
  EXPECT_THROW(k31.eval(0.3, 3), SmoothnessError);
  EXPECT_THROW(ScaledKernel(wendland(3, 1), 0.0, 0.0), InvalidParameter);
}

TEST(ScaledKernel, DerivativesMatchFiniteDifferences) {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  std::uniform_real_distribution<double> centre(-3.0, 3.0);
  std::uniform_real_distribution<double> rad(0.3, 5.0);
  std::bernoulli_distribution side(0.5);
  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 100; ++trial) {
      const ScaledKernel sk(wendland(3, k), rad(rng), centre(rng));
      const double r = unit(rng);
      const double x = sk.center() + (side(rng) ? 1.0 : -1.0) * r * sk.radius();
      const double h = 1e-3 * sk.radius();
      if (r < 2.5e-3 || r > 1.0 - 2.5e-3) continue;
      const double d1 = sk.eval(x, 1);
      const double d2 = sk.eval(x, 2);
      const double s1 = 1.0 / sk.radius();
      const double s2 = s1 * s1;
      EXPECT_NEAR(five_point_d1(sk, x, h), d1, 1e-6 * std::max(std::abs(d1), s1)) << "k=" << k << " x=" << x;
      EXPECT_NEAR(five_point_d2(sk, x, h), d2, 1e-6 * std::max(std::abs(d2), s2)) << "k=" << k << " x=" << x;
    }
  }
}

TEST(Antiderivative, Examples) {
  const ScaledKernel k31(wendland(3, 1), 1.0, 0.0);
  const auto f = antiderivative(k31);
  EXPECT_EQ(f(0.0), 0.0);
  // int_0^1 (1-t)^4 (4t+1) dt = int_0^1 u^4 (5 - 4u) du = 1 - 2/3
  EXPECT_NEAR(f(1.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(f(7.0), f(1.0), 1e-15);
  EXPECT_NEAR(f.plateau(), 1.0 / 3.0, 1e-15);
}

TEST(Antiderivative, AgreesWithHighOrderQuadrature) {
  const auto rule = gauss_legendre(48);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> centre(0.0, 6.0);
  std::uniform_real_distribution<double> rad(0.5, 7.0);
  std::uniform_real_distribution<double> upper(0.0, 14.0);
  for (int trial = 0; trial < 50; ++trial) {
    const ScaledKernel sk(default_kernel(), rad(rng), centre(rng));
    const auto f = antiderivative(sk);
    const double x = upper(rng);
    const auto cuts = f.breakpoints();
    const double quad1 = integrate_to_composite(sk, x, cuts, rule);
    EXPECT_NEAR(f.value(x), quad1, 1e-13 * std::max(1.0, sk.radius()));
    const double quad2 = integrate_to_composite([&](double t) { return f.value(t); }, x, cuts, rule);
    EXPECT_NEAR(f.integral(x), quad2, 1e-12 * std::max(1.0, sk.radius() * x));
  }
}

TEST(Antiderivative, DifferentiatesBackToKernelAndIsMonotone) {
  const ScaledKernel sk(default_kernel(), 2.5, 1.2);
  const auto f = antiderivative(sk);
  const double h = 1e-5;
  double prev = f(0.0);
  for (int i = 1; i < 400; ++i) {
    const double x = 0.01 * i + 1e-3;
    EXPECT_NEAR((f(x + h) - f(x - h)) / (2 * h), sk(x), 1e-8);
    EXPECT_NEAR((f.integral(x + h) - f.integral(x - h)) / (2 * h), f(x), 1e-8);
    EXPECT_GE(f(x), prev - 1e-13) << std::setprecision(17) << f(x) - prev;
    prev = f(x);
  }
}

TEST(Antiderivative, BreakpointsClipToPositiveAxis) {
  const auto f = antiderivative(ScaledKernel(default_kernel(), 2.0, 1.0));
  EXPECT_EQ(f.breakpoints(), (std::vector<double>{1.0, 3.0}));
}

TEST(InterpolationMatrix, Examples) {
  const std::vector<double> one{0.4};
  const auto a1 = interpolation_matrix(one, one, 1.0, default_kernel());
  ASSERT_EQ(a1.rows(), 1);
  EXPECT_EQ(a1(0, 0), 1.0);

  const std::vector<double> apart{0.0, 3.0};
  EXPECT_TRUE(interpolation_matrix(apart, apart, 1.0, default_kernel()).isIdentity(0.0));

  const std::vector<double> five{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto a5 = interpolation_matrix(five, five, 1.0, wendland(3, 1));
  EXPECT_TRUE(a5.isApprox(a5.transpose(), 0.0));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(a5(i, i), 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a5);
  EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
}

TEST(InterpolationMatrix, Errors) {
  const std::vector<double> a{0.0, 1.0};
  const std::vector<double> b{0.0};
  EXPECT_THROW(interpolation_matrix(a, b, 1.0, default_kernel()), InvalidParameter);
  const std::vector<double> dup{0.5, 0.5};
  EXPECT_THROW(interpolation_matrix(dup, dup, 1.0, default_kernel()), InvalidParameter);
}

TEST(InterpolationMatrix, PositiveDefiniteOnDistinctPoints) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> count(1, 20);
  std::uniform_real_distribution<double> rad(0.2, 1.0);
  std::uniform_int_distribution<int> kdist(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = count(rng);
    // distinct points on a jittered lattice of spacing 0.1
    std::vector<double> pts;
    std::uniform_real_distribution<double> jitter(0.0, 0.03);
    for (int i = 0; i < n; ++i) pts.push_back(0.1 * i + jitter(rng));
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto a = interpolation_matrix(pts, pts, rad(rng), wendland(3, kdist(rng)));
    ASSERT_TRUE(a.isApprox(a.transpose(), 0.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0) << "trial " << trial << " n=" << n;
  }
}
