#pragma once

// Indirect CSRBF collocation for singular initial value problems of
// Lane-Emden type. y'' is expanded in shifted Wendland kernels, y' and y
// are recovered by integrating from 0 with the initial values as
// integration constants, and the residual is collocated on a graded grid.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icsrbf/error.hpp"
#include "icsrbf/kernel.hpp"
#include "icsrbf/problem.hpp"
#include "icsrbf/quadrature.hpp"

namespace icsrbf {

/// x_j = L (j/N)^gamma, j = 1..N. The last node is exactly L.
inline std::vector<double> make_grid(int n, double length, double gamma) {
  if (n < 2) throw InvalidParameter("make_grid: N must be >= 2, got " + std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length)) throw InvalidParameter("make_grid: L must be positive");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidParameter("make_grid: gamma must be positive");
  std::vector<double> nodes(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    nodes[static_cast<std::size_t>(j - 1)] = length * std::pow(static_cast<double>(j) / n, gamma);
  nodes.back() = length;
  return nodes;
}

/// How the once- and twice-integrated basis functions are computed.
enum class BasisIntegration {
  nested_quadrature,     ///< single-panel Gauss-Legendre, nested for the second integral
  composite_quadrature,  ///< as above, split at each kernel's support joints
  exact,                 ///< exact piecewise-polynomial antiderivatives
};

struct SetupParams {
  int n = 20;
  double support_radius = 4.0;
  double length = 6.0;
  double gamma = 1.5;
  int kernel_s = 3;
  int kernel_k = 3;
  int quadrature_order = kDefaultQuadratureOrder;
  BasisIntegration integration = BasisIntegration::nested_quadrature;
};

/// Basis functions and their integrals at one coordinate.
struct BasisRows {
  Eigen::VectorXd d2;  ///< phi_i(x)                 -> contributes to y''
  Eigen::VectorXd d1;  ///< int_0^x phi_i           -> contributes to y'
  Eigen::VectorXd d0;  ///< int_0^x int_0^t phi_i   -> contributes to y
};

/// Grid, kernel, quadrature and per-node basis tables. Immutable; the
/// node tables are computed once so Newton iterations cost O(N^2).
class CollocationSetup {
 public:
  explicit CollocationSetup(const SetupParams& params)
      : params_(params),
        kernel_(&wendland(params.kernel_s, params.kernel_k)),
        rule_(gauss_legendre(params.quadrature_order)),
        nodes_(make_grid(params.n, params.length, params.gamma)) {
    if (!(params.support_radius > 0.0) || !std::isfinite(params.support_radius))
      throw InvalidParameter("support radius must be positive");
    if (kernel_->k() < 1) throw InvalidParameter("kernel must be at least C^2 (k >= 1) to represent y''");
    kernels_.reserve(nodes_.size());
    antiderivatives_.reserve(nodes_.size());
    for (double c : nodes_) {
      kernels_.emplace_back(*kernel_, params.support_radius, c);
      antiderivatives_.emplace_back(kernels_.back());
    }
    const auto n = static_cast<Eigen::Index>(nodes_.size());
    at_nodes_d2_.resize(n, n);
    at_nodes_d1_.resize(n, n);
    at_nodes_d0_.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const BasisRows row = rows(nodes_[static_cast<std::size_t>(j)]);
      at_nodes_d2_.row(j) = row.d2.transpose();
      at_nodes_d1_.row(j) = row.d1.transpose();
      at_nodes_d0_.row(j) = row.d0.transpose();
    }
  }

  const SetupParams& params() const noexcept { return params_; }
  int size() const noexcept { return params_.n; }
  double length() const noexcept { return params_.length; }
  double support_radius() const noexcept { return params_.support_radius; }
  double gamma() const noexcept { return params_.gamma; }
  const WendlandKernel& kernel() const noexcept { return *kernel_; }
  const QuadratureRule& rule() const noexcept { return rule_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  /// Kernel centers coincide with the collocation nodes.
  std::span<const double> centers() const noexcept { return nodes_; }
  std::span<const ScaledKernel> basis() const noexcept { return kernels_; }

  const Eigen::MatrixXd& node_table_d2() const noexcept { return at_nodes_d2_; }
  const Eigen::MatrixXd& node_table_d1() const noexcept { return at_nodes_d1_; }
  const Eigen::MatrixXd& node_table_d0() const noexcept { return at_nodes_d0_; }

  Eigen::VectorXd basis_d2(double x) const {
    Eigen::VectorXd out(size());
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = kernels_[static_cast<std::size_t>(i)](x);
    return out;
  }

  Eigen::VectorXd basis_d1(double x) const {
    check_coordinate(x);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(size());
    if (x == 0.0) return out;
    switch (params_.integration) {
      case BasisIntegration::nested_quadrature:
        accumulate_d1(out, 0.0, x, 1.0);
        break;
      case BasisIntegration::composite_quadrature:
        for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = composite_d1(static_cast<std::size_t>(i), x);
        break;
      case BasisIntegration::exact:
        for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = antiderivatives_[static_cast<std::size_t>(i)].value(x);
        break;
    }
    return out;
  }

  Eigen::VectorXd basis_d0(double x) const {
    check_coordinate(x);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(size());
    if (x == 0.0) return out;
    switch (params_.integration) {
      case BasisIntegration::nested_quadrature: {
        // Outer rule on [0, x] applied to the inner-quadrature function t -> Phi1(t).
        const double half = 0.5 * x;
        const auto eta = rule_.nodes();
        const auto w = rule_.weights();
        for (std::size_t j = 0; j < eta.size(); ++j) accumulate_d1(out, 0.0, half * eta[j] + half, half * w[j]);
        break;
      }
      case BasisIntegration::composite_quadrature:
        for (Eigen::Index i = 0; i < out.size(); ++i) {
          const auto idx = static_cast<std::size_t>(i);
          const auto cuts = antiderivatives_[idx].breakpoints();
          out(i) = integrate_to_composite([&](double t) { return composite_d1(idx, t); }, x, cuts, rule_);
        }
        break;
      case BasisIntegration::exact:
        for (Eigen::Index i = 0; i < out.size(); ++i)
          out(i) = antiderivatives_[static_cast<std::size_t>(i)].integral(x);
        break;
    }
    return out;
  }

  BasisRows rows(double x) const { return {basis_d2(x), basis_d1(x), basis_d0(x)}; }

 private:
  static void check_coordinate(double x) {
    if (!(x >= 0.0)) throw InvalidParameter("basis integrals are defined for x >= 0 only");
  }

  // out += scale * int_a^b phi_i(t) dt for every i (single panel).
  void accumulate_d1(Eigen::VectorXd& out, double a, double b, double scale) const {
    if (b <= a) return;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const auto eta = rule_.nodes();
    const auto w = rule_.weights();
    const double radius = params_.support_radius;
    for (std::size_t l = 0; l < eta.size(); ++l) {
      const double t = half * eta[l] + mid;
      const double weight = scale * half * w[l];
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const double r = std::abs(t - nodes_[i]) / radius;
        if (r < 1.0) out(static_cast<Eigen::Index>(i)) += weight * (*kernel_)(r);
      }
    }
  }

  double composite_d1(std::size_t i, double x) const {
    const auto cuts = antiderivatives_[i].breakpoints();
    return integrate_to_composite(kernels_[i], x, cuts, rule_);
  }

  SetupParams params_;
  const WendlandKernel* kernel_;
  QuadratureRule rule_;
  std::vector<double> nodes_;
  std::vector<ScaledKernel> kernels_;
  std::vector<KernelAntiderivative> antiderivatives_;
  Eigen::MatrixXd at_nodes_d2_;
  Eigen::MatrixXd at_nodes_d1_;
  Eigen::MatrixXd at_nodes_d0_;
};

inline std::shared_ptr<const CollocationSetup> make_setup(const SetupParams& params) {
  return std::make_shared<const CollocationSetup>(params);
}

namespace detail {

inline void check_coefficients(const CollocationSetup& setup, const Eigen::VectorXd& xi) {
  if (xi.size() != setup.size())
    throw InvalidParameter("coefficient vector has length " + std::to_string(xi.size()) + ", expected " +
                           std::to_string(setup.size()));
}

}  // namespace detail

/// y''(x) = sum_i xi_i phi_i(x).
inline double eval_y2(const CollocationSetup& setup, const Eigen::VectorXd& xi, double x) {
  detail::check_coefficients(setup, xi);
  return setup.basis_d2(x).dot(xi);
}

/// y'(x) = B + int_0^x y''.
inline double eval_y1(const CollocationSetup& setup, const Eigen::VectorXd& xi, double x, double b) {
  detail::check_coefficients(setup, xi);
  return b + setup.basis_d1(x).dot(xi);
}

/// y(x) = A + int_0^x y' = A + B x + int_0^x int_0^t y''.
inline double eval_y(const CollocationSetup& setup, const Eigen::VectorXd& xi, double x, double a, double b) {
  detail::check_coefficients(setup, xi);
  return a + b * x + setup.basis_d0(x).dot(xi);
}

namespace detail {

// Residual multiplied through by x, so it stays finite at the singular point.
inline double residual_from(const ProblemSpec& problem, double x, double y, double dy, double d2y) {
  const double qy = problem.q(y);
  if (!std::isfinite(qy)) throw DomainError(x, y, problem.label + ": nonlinearity undefined");
  return x * d2y + problem.alpha * dy + x * problem.p(x) * qy - x * problem.h(x);
}

}  // namespace detail

/// Res(x) = x y'' + alpha y' + x p(x) q(y) - x h(x).
inline double residual(const ProblemSpec& problem, const CollocationSetup& setup, const Eigen::VectorXd& xi,
                       double x) {
  detail::check_coefficients(setup, xi);
  const BasisRows row = setup.rows(x);
  const double y = problem.A + problem.B * x + row.d0.dot(xi);
  const double dy = problem.B + row.d1.dot(xi);
  return detail::residual_from(problem, x, y, dy, row.d2.dot(xi));
}

struct CollocationSystem {
  Eigen::VectorXd residual;  ///< F_j = Res(x_j)
  Eigen::MatrixXd jacobian;  ///< dF_j / dxi_i
  Eigen::VectorXd y;         ///< y(x_j)
};

namespace detail {

inline Eigen::VectorXd residual_vector(const ProblemSpec& problem, const CollocationSetup& setup,
                                       const Eigen::VectorXd& xi, Eigen::VectorXd* y_out = nullptr) {
  const auto nodes = setup.nodes();
  const Eigen::VectorXd d2 = setup.node_table_d2() * xi;
  const Eigen::VectorXd d1 = setup.node_table_d1() * xi;
  const Eigen::VectorXd d0 = setup.node_table_d0() * xi;
  Eigen::VectorXd f(setup.size());
  Eigen::VectorXd y(setup.size());
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    const double x = nodes[static_cast<std::size_t>(j)];
    y(j) = problem.A + problem.B * x + d0(j);
    f(j) = residual_from(problem, x, y(j), problem.B + d1(j), d2(j));
  }
  if (y_out) *y_out = std::move(y);
  return f;
}

}  // namespace detail

/// F and its analytic Jacobian
///   J_ji = x_j phi_i(x_j) + alpha Phi1_i(x_j) + x_j p(x_j) q'(y_j) Phi2_i(x_j).
inline CollocationSystem assemble_system(const ProblemSpec& problem, const CollocationSetup& setup,
                                         const Eigen::VectorXd& xi) {
  detail::check_coefficients(setup, xi);
  CollocationSystem sys;
  sys.residual = detail::residual_vector(problem, setup, xi, &sys.y);
  const auto nodes = setup.nodes();
  const auto n = static_cast<Eigen::Index>(nodes.size());
  sys.jacobian.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double x = nodes[static_cast<std::size_t>(j)];
    const double dq = problem.dq(sys.y(j));
    if (!std::isfinite(dq)) throw DomainError(x, sys.y(j), problem.label + ": derivative of nonlinearity undefined");
    const double coupling = x * problem.p(x) * dq;
    sys.jacobian.row(j) = x * setup.node_table_d2().row(j) + problem.alpha * setup.node_table_d1().row(j) +
                          coupling * setup.node_table_d0().row(j);
  }
  return sys;
}

struct SolveOptions {
  double tol = 1e-12;
  int max_iter = 50;
  int max_halvings = 20;
  /// When no damped step lowers ||F||_2 any more, the iterate is accepted
  /// as converged if ||F||_inf <= stagnation_tol * (1 + ||F(0)||_inf).
  double stagnation_tol = 1e-8;
};

struct Diagnostics {
  int iterations = 0;
  double residual_inf = 0.0;  ///< ||F||_inf at the returned coefficients
  double residual_2 = 0.0;
  double last_step_inf = 0.0;
  bool converged = false;
  std::string message;
};

/// Converged collocation solution; y, y', y'' are available at any x >= 0.
class Solution {
 public:
  Solution(std::shared_ptr<const CollocationSetup> setup, ProblemSpec problem, Eigen::VectorXd xi, Diagnostics diag)
      : setup_(std::move(setup)), problem_(std::move(problem)), xi_(std::move(xi)), diagnostics_(std::move(diag)) {}

  const CollocationSetup& setup() const noexcept { return *setup_; }
  std::shared_ptr<const CollocationSetup> setup_ptr() const noexcept { return setup_; }
  const ProblemSpec& problem() const noexcept { return problem_; }
  const Eigen::VectorXd& coefficients() const noexcept { return xi_; }
  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }
  bool converged() const noexcept { return diagnostics_.converged; }

  double y(double x) const { return eval_y(*setup_, xi_, x, problem_.A, problem_.B); }
  double dy(double x) const { return eval_y1(*setup_, xi_, x, problem_.B); }
  double d2y(double x) const { return eval_y2(*setup_, xi_, x); }
  double residual(double x) const { return icsrbf::residual(problem_, *setup_, xi_, x); }
  double operator()(double x) const { return y(x); }

 private:
  std::shared_ptr<const CollocationSetup> setup_;
  ProblemSpec problem_;
  Eigen::VectorXd xi_;
  Diagnostics diagnostics_;
};

/// Damped Newton on Res(x_j) = 0 starting from xi = 0 (y = A + B x).
/// Steps solve J d = -F with partially pivoted LU; a step is halved until
/// ||F||_2 decreases. Running out of iterations returns an unconverged
/// Solution; a singular Jacobian throws SolverError.
inline Solution solve(const ProblemSpec& problem, std::shared_ptr<const CollocationSetup> setup,
                      const SolveOptions& options = {}) {
  if (!setup) throw InvalidParameter("solve: null setup");
  if (!problem.q || !problem.dq || !problem.p || !problem.h) throw InvalidParameter("solve: incomplete problem");
  if (!(options.tol > 0.0) || options.max_iter < 1) throw InvalidParameter("solve: tol must be > 0, max_iter >= 1");

  Eigen::VectorXd xi = Eigen::VectorXd::Zero(setup->size());
  CollocationSystem sys = assemble_system(problem, *setup, xi);
  const double f0_inf = sys.residual.lpNorm<Eigen::Infinity>();
  Diagnostics diag;

  auto finish = [&](bool converged, std::string message) {
    diag.converged = converged;
    diag.residual_inf = sys.residual.lpNorm<Eigen::Infinity>();
    diag.residual_2 = sys.residual.norm();
    diag.message = std::move(message);
    return Solution(setup, problem, xi, diag);
  };

  for (int iter = 0; iter < options.max_iter; ++iter) {
    if (sys.residual.lpNorm<Eigen::Infinity>() < options.tol) return finish(true, "residual below tolerance");

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.jacobian);
    const Eigen::VectorXd step = lu.solve(-sys.residual);
    if (!step.allFinite()) throw SolverError("solve: singular Jacobian at Newton iteration " + std::to_string(iter));
    diag.iterations = iter + 1;
    diag.last_step_inf = step.lpNorm<Eigen::Infinity>();

    const double grip = options.tol * (1.0 + xi.lpNorm<Eigen::Infinity>());
    if (diag.last_step_inf < grip) {
      xi += step;
      sys = assemble_system(problem, *setup, xi);
      return finish(true, "step below tolerance");
    }

    const double norm0 = sys.residual.norm();
    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h, lambda *= 0.5) {
      const Eigen::VectorXd trial = xi + lambda * step;
      try {
        CollocationSystem next = assemble_system(problem, *setup, trial);
        if (next.residual.allFinite() && next.residual.norm() < norm0) {
          xi = trial;
          sys = std::move(next);
          accepted = true;
          break;
        }
      } catch (const DomainError&) {
        // rejected trial; halve and retry
      }
    }
    if (!accepted) {
      const bool floor = sys.residual.lpNorm<Eigen::Infinity>() <= options.stagnation_tol * (1.0 + f0_inf);
      return finish(floor, floor ? "stagnated at round-off level" : "line search failed");
    }
  }
  if (sys.residual.lpNorm<Eigen::Infinity>() < options.tol) return finish(true, "residual below tolerance");
  return finish(false, "maximum number of iterations reached");
}

}  // namespace icsrbf
