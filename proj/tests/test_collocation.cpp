#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "icsrbf/collocation.hpp"
#include "icsrbf/problems.hpp"

using namespace icsrbf;

namespace {

SetupParams params(int n, double r, double L, double gamma) {
  SetupParams p;
  p.n = n;
  p.support_radius = r;
  p.length = L;
  p.gamma = gamma;
  return p;
}

Eigen::VectorXd random_coefficients(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Eigen::VectorXd xi(n);
  for (int i = 0; i < n; ++i) xi(i) = d(rng);
  return xi;
}

}  // namespace

TEST(Grid, Examples) {
  const auto g = make_grid(4, 2.0, 1.0);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_DOUBLE_EQ(g[0], 0.5);
  EXPECT_DOUBLE_EQ(g[1], 1.0);
  EXPECT_EQ(g[3], 2.0);
  const auto g2 = make_grid(2, 6.0, 2.0);
  EXPECT_DOUBLE_EQ(g2[0], 1.5);
}

TEST(Grid, MonotoneWithExactEndpoint) {
  for (double gamma : {0.5, 1.0, 1.5, 1.9, 3.0}) {
    const auto g = make_grid(25, 6.5, gamma);
    EXPECT_EQ(g.back(), 6.5);
    EXPECT_GT(g.front(), 0.0);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
  }
}

TEST(Grid, RejectsInvalidInput) {
  EXPECT_THROW(make_grid(1, 1.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(5, 0.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(5, 1.0, -1.0), InvalidParameter);
  EXPECT_THROW(make_grid(5, std::numeric_limits<double>::infinity(), 1.0), InvalidParameter);
}

TEST(Setup, ShapesAndAccessors) {
  const auto s = make_setup(params(12, 2.0, 3.0, 1.5));
  EXPECT_EQ(s->size(), 12);
  EXPECT_EQ(s->node_table_d0().rows(), 12);
  EXPECT_EQ(s->node_table_d0().cols(), 12);
  EXPECT_EQ(s->basis().size(), 12u);
  EXPECT_EQ(s->rule().order(), 64);
  EXPECT_EQ(s->centers().data(), s->nodes().data());
  EXPECT_EQ(s->basis_d2(1.0).size(), 12);
}

TEST(Setup, RejectsInvalidParameters) {
  auto p = params(10, 0.0, 2.0, 1.5);
  EXPECT_THROW(CollocationSetup{p}, InvalidParameter);
  p.support_radius = 1.0;
  p.kernel_k = 0;
  EXPECT_THROW(CollocationSetup{p}, InvalidParameter);
  p.kernel_k = 3;
  p.quadrature_order = 0;
  EXPECT_THROW(CollocationSetup{p}, InvalidParameter);
  const CollocationSetup ok(params(10, 1.0, 2.0, 1.5));
  EXPECT_THROW(ok.basis_d1(-0.1), InvalidParameter);
  EXPECT_THROW(eval_y2(ok, Eigen::VectorXd::Zero(3), 0.5), InvalidParameter);
}

TEST(Evaluation, InitialConditionsHoldExactly) {
  const auto s = make_setup(params(15, 3.0, 5.0, 1.5));
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const Eigen::VectorXd xi = random_coefficients(15, seed);
    EXPECT_EQ(eval_y(*s, xi, 0.0, 0.7, -0.2), 0.7);
    EXPECT_EQ(eval_y1(*s, xi, 0.0, -0.2), -0.2);
  }
}

TEST(Evaluation, SingleBasisFunctionExample) {
  // One kernel, all others zero: y'' is that kernel, y' and y its integrals.
  auto p = params(5, 1.0, 2.0, 1.0);
  p.integration = BasisIntegration::exact;
  const auto s = make_setup(p);
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(5);
  xi(0) = 1.0;  // centred at 0.4
  const ScaledKernel& k = s->basis()[0];
  EXPECT_DOUBLE_EQ(eval_y2(*s, xi, 0.4), 1.0);
  EXPECT_EQ(eval_y2(*s, xi, 1.5), 0.0);
  const auto f = antiderivative(k);
  EXPECT_NEAR(eval_y1(*s, xi, 1.9, 0.0), f.value(1.9), 1e-12);
  EXPECT_NEAR(eval_y(*s, xi, 1.9, 0.0, 0.0), f.integral(1.9), 1e-12);
}

TEST(Evaluation, DerivativesConsistentWithFiniteDifferences) {
  const auto s = make_setup(params(20, 4.0, 6.0, 1.5));
  const double h = 1e-4;
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const Eigen::VectorXd xi = random_coefficients(20, seed);
    for (double x : {0.3, 1.1, 2.7, 4.4, 5.5}) {
      const double fd1 = (eval_y(*s, xi, x + h, 1.0, 0.0) - eval_y(*s, xi, x - h, 1.0, 0.0)) / (2 * h);
      const double fd2 = (eval_y1(*s, xi, x + h, 0.0) - eval_y1(*s, xi, x - h, 0.0)) / (2 * h);
      EXPECT_NEAR(fd1, eval_y1(*s, xi, x, 0.0), 1e-5 * (1.0 + std::abs(fd1)));
      EXPECT_NEAR(fd2, eval_y2(*s, xi, x), 1e-5 * (1.0 + std::abs(fd2)));
    }
  }
}

TEST(Evaluation, IntegrationModesAgree) {
  auto p = params(20, 4.0, 6.0, 1.5);
  const auto nested = make_setup(p);
  p.integration = BasisIntegration::composite_quadrature;
  const auto composite = make_setup(p);
  p.integration = BasisIntegration::exact;
  const auto exact = make_setup(p);
  const Eigen::VectorXd xi = random_coefficients(20, 99);
  for (double x : {0.1, 0.5, 1.0, 3.0, 4.0, 4.3, 6.0}) {
    const double ye = eval_y(*exact, xi, x, 1.0, 0.0);
    EXPECT_NEAR(eval_y(*composite, xi, x, 1.0, 0.0), ye, 1e-12);
    EXPECT_NEAR(eval_y(*nested, xi, x, 1.0, 0.0), ye, 1e-6);
    EXPECT_NEAR(eval_y1(*composite, xi, x, 0.0), eval_y1(*exact, xi, x, 0.0), 1e-12);
  }
}

TEST(Evaluation, InterpolatedSecondDerivativeRecoversFunction) {
  // Interpolating the second derivative of sin(x)/x at the nodes and
  // integrating twice recovers sin(x)/x up to interpolation error.
  auto p = params(30, 4.0, 6.0, 1.3);
  p.integration = BasisIntegration::exact;
  const CollocationSetup s(p);
  const auto le = standard_lane_emden(1.0);
  auto d2 = [](double x) {
    return -std::sin(x) / x - 2.0 * std::cos(x) / (x * x) + 2.0 * std::sin(x) / (x * x * x);
  };
  Eigen::VectorXd rhs(30);
  for (int j = 0; j < 30; ++j) rhs(j) = d2(s.nodes()[static_cast<std::size_t>(j)]);
  const Eigen::VectorXd xi = s.node_table_d2().colPivHouseholderQr().solve(rhs);
  for (double x : {0.5, 2.0, 4.0}) EXPECT_NEAR(eval_y(s, xi, x, 1.0, 0.0), le.exact(x), 5e-3);
}

TEST(Residual, ZeroCoefficientsForConstantRhs) {
  // m = 0 and xi = 0: y = 1, y' = 0, so Res = x.
  const auto le = standard_lane_emden(0.0);
  const auto s = make_setup(params(10, 2.0, 3.0, 1.5));
  const Eigen::VectorXd xi = Eigen::VectorXd::Zero(10);
  for (double x : {0.0, 0.5, 2.9}) EXPECT_DOUBLE_EQ(residual(le.spec, *s, xi, x), x);
  const auto sys = assemble_system(le.spec, *s, xi);
  for (int j = 0; j < 10; ++j) EXPECT_DOUBLE_EQ(sys.residual(j), s->nodes()[static_cast<std::size_t>(j)]);
  EXPECT_EQ(sys.y.size(), 10);
}

TEST(Residual, DomainErrorCarriesLocation) {
  // y = 0.5 everywhere, so y^2 - sigma < 0.
  auto spec = white_dwarf(0.5).spec;
  spec.A = 0.5;
  const auto s = make_setup(params(10, 0.5, 1.0, 1.5));
  const Eigen::VectorXd xi = Eigen::VectorXd::Zero(10);
  try {
    (void)residual(spec, *s, xi, 0.9);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.x(), 0.9);
    EXPECT_LT(e.y() * e.y(), 0.5);
  }
}

TEST(Jacobian, MatchesFiniteDifferences) {
  const auto s = make_setup(params(12, 3.0, 5.0, 1.5));
  for (double m : {1.0, 2.0, 3.0, 5.0}) {
    const auto le = standard_lane_emden(m);
    const Eigen::VectorXd xi = 0.05 * random_coefficients(12, static_cast<unsigned>(m * 10));
    const auto sys = assemble_system(le.spec, *s, xi);
    const double h = 1e-6;
    for (int i = 0; i < 12; ++i) {
      Eigen::VectorXd xp = xi, xm = xi;
      xp(i) += h;
      xm(i) -= h;
      const Eigen::VectorXd col =
          (assemble_system(le.spec, *s, xp).residual - assemble_system(le.spec, *s, xm).residual) / (2 * h);
      EXPECT_LT((col - sys.jacobian.col(i)).lpNorm<Eigen::Infinity>(),
                1e-6 * (1.0 + sys.jacobian.col(i).lpNorm<Eigen::Infinity>()))
          << "m=" << m << " i=" << i;
    }
  }
}

TEST(Solve, LinearProblemNeedsOneNewtonStep) {
  const auto le = standard_lane_emden(0.0);
  const auto sol = solve(le.spec, make_setup(params(20, 4.0, 6.0, 1.5)));
  EXPECT_TRUE(sol.converged());
  EXPECT_LE(sol.diagnostics().iterations, 2);
  for (double x : {0.5, 2.0, 5.0}) EXPECT_NEAR(sol.y(x), le.exact(x), 1e-5);
}

TEST(Solve, KnownClosedFormSolutions) {
  for (double m : {0.0, 1.0, 5.0}) {
    const auto le = standard_lane_emden(m);
    const auto sol = solve(le.spec, make_setup(params(20, 4.0, 6.0, 1.5)));
    ASSERT_TRUE(sol.converged()) << sol.diagnostics().message;
    double worst = 0.0;
    for (int i = 1; i <= 60; ++i) worst = std::max(worst, std::abs(sol.y(0.1 * i) - le.exact(0.1 * i)));
    EXPECT_LT(worst, 1e-4) << "m=" << m;
  }
}

TEST(Solve, CollocationResidualVanishesAtNodes) {
  const auto le = standard_lane_emden(3.0);
  const auto s = make_setup(params(20, 4.0, 7.0, 1.5));
  const auto sol = solve(le.spec, s);
  ASSERT_TRUE(sol.converged());
  for (double x : s->nodes()) EXPECT_LT(std::abs(sol.residual(x)), 1e-8);
  EXPECT_LT(sol.diagnostics().residual_inf, 1e-8);
}

TEST(Solve, NestedQuadratureMatchesExactIntegration) {
  const auto le = standard_lane_emden(2.0);
  auto p = params(20, 4.0, 6.0, 1.5);
  const auto nested = solve(le.spec, make_setup(p));
  p.integration = BasisIntegration::exact;
  const auto exact = solve(le.spec, make_setup(p));
  ASSERT_TRUE(nested.converged());
  ASSERT_TRUE(exact.converged());
  for (double x : {0.1, 0.5, 1.0, 3.0, 4.0, 4.3}) EXPECT_LT(std::abs(nested.y(x) - exact.y(x)), 1e-8) << x;
}

TEST(Solve, ResidualNormDecreasesWithN) {
  const auto le = standard_lane_emden(1.0);
  double prev = std::numeric_limits<double>::infinity();
  for (int n : {5, 10, 15, 20}) {
    const auto sol = solve(le.spec, make_setup(params(n, 6.5, 10.0, 1.5)));
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) worst = std::max(worst, std::abs(sol.y(0.1 * i) - le.exact(0.1 * i)));
    EXPECT_LT(worst, prev) << n;
    prev = worst;
  }
}

TEST(Solve, ErrorPaths) {
  auto le = standard_lane_emden(2.0);
  const auto s = make_setup(params(10, 2.0, 3.0, 1.5));
  EXPECT_THROW(solve(le.spec, nullptr), InvalidParameter);
  SolveOptions bad;
  bad.tol = 0.0;
  EXPECT_THROW(solve(le.spec, s, bad), InvalidParameter);

  SolveOptions one;
  one.max_iter = 1;
  const auto partial = solve(le.spec, s, one);
  EXPECT_FALSE(partial.converged());
  EXPECT_EQ(partial.diagnostics().message, "maximum number of iterations reached");

  ProblemSpec nan_rhs = le.spec;
  nan_rhs.h = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
  EXPECT_THROW(solve(nan_rhs, s), Error);

  ProblemSpec incomplete = le.spec;
  incomplete.q = nullptr;
  EXPECT_THROW(solve(incomplete, s), InvalidParameter);
}
