#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icsrbf/error.hpp"

namespace icsrbf {

struct LegendreValue {
  double value;
  double derivative;
};

/// P_q(x) and P_q'(x) by the three-term recurrence.
inline LegendreValue legendre_eval(int q, double x) {
  if (q < 0) throw InvalidParameter("legendre_eval: order must be non-negative");
  if (q == 0) return {1.0, 0.0};
  double p_prev = 1.0;
  double p = x;
  for (int n = 2; n <= q; ++n) {
    const double next = ((2.0 * n - 1.0) * x * p - (n - 1.0) * p_prev) / n;
    p_prev = p;
    p = next;
  }
  // P_q' = q (x P_q - P_{q-1}) / (x^2 - 1), singular at the endpoints.
  double dp;
  if (std::abs(x) == 1.0) {
    const double sign = (x > 0.0 || q % 2 == 1) ? 1.0 : -1.0;
    dp = sign * 0.5 * q * (q + 1.0);
  } else {
    dp = q * (x * p - p_prev) / (x * x - 1.0);
  }
  return {p, dp};
}

/// Gauss-Legendre rule on [-1, 1]: nodes ascending, weights positive.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
      : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.size() != weights_.size() || nodes_.empty())
      throw InvalidParameter("quadrature rule needs matching, non-empty node and weight arrays");
  }

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Roots of P_q by Newton iteration from Chebyshev-type initial guesses;
/// weights 2 / ((1 - x^2) P_q'(x)^2).
inline QuadratureRule gauss_legendre(int q) {
  if (q < 1) throw InvalidParameter("gauss_legendre: order must be >= 1, got " + std::to_string(q));
  std::vector<double> nodes(static_cast<std::size_t>(q));
  std::vector<double> weights(static_cast<std::size_t>(q));
  const int half = (q + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    bool converged = false;
    LegendreValue pv{};
    for (int it = 0; it < 100; ++it) {
      pv = legendre_eval(q, x);
      const double step = pv.value / pv.derivative;
      x -= step;
      if (std::abs(step) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) throw SolverError("gauss_legendre: Newton iteration for root did not converge");
    pv = legendre_eval(q, x);
    const double w = 2.0 / ((1.0 - x * x) * pv.derivative * pv.derivative);
    // Guesses run from the right end; store mirrored pairs in ascending order.
    const auto hi = static_cast<std::size_t>(q - 1 - i);
    const auto lo = static_cast<std::size_t>(i);
    nodes[hi] = x;
    nodes[lo] = -x;
    weights[hi] = w;
    weights[lo] = w;
  }
  if (q % 2 == 1) nodes[static_cast<std::size_t>(q / 2)] = 0.0;
  return QuadratureRule(std::move(nodes), std::move(weights));
}

/// Default order used by the collocation solver.
inline constexpr int kDefaultQuadratureOrder = 64;

/// (b - a)/2 * sum_j w_j f((b - a)/2 eta_j + (a + b)/2).
template <class F>
double integrate_interval(F&& f, double a, double b, const QuadratureRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  double acc = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) acc += weights[j] * f(half * nodes[j] + mid);
  return half * acc;
}

/// int_0^x f(t) dt by the rule mapped affinely onto [0, x]. Exactly 0 at x = 0.
template <class F>
double integrate_to(F&& f, double x, const QuadratureRule& rule) {
  if (x < 0.0 || std::isnan(x)) throw InvalidParameter("integrate_to: upper limit must be >= 0");
  if (x == 0.0) return 0.0;
  return integrate_interval(f, 0.0, x, rule);
}

/// Composite variant: [0, x] is split at every breakpoint strictly inside it
/// and each panel gets the full rule, so integrands that are only C^n at the
/// breakpoints are integrated with the rule's polynomial exactness.
template <class F>
double integrate_to_composite(F&& f, double x, std::span<const double> breakpoints, const QuadratureRule& rule) {
  if (x < 0.0 || std::isnan(x)) throw InvalidParameter("integrate_to: upper limit must be >= 0");
  if (x == 0.0) return 0.0;
  std::vector<double> cuts;
  cuts.reserve(breakpoints.size() + 2);
  cuts.push_back(0.0);
  for (double b : breakpoints)
    if (b > 0.0 && b < x) cuts.push_back(b);
  cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) acc += integrate_interval(f, cuts[i], cuts[i + 1], rule);
  return acc;
}

}  // namespace icsrbf
