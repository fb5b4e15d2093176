#pragma once

// Wendland compactly supported radial kernels phi_{s,k}, built in exact
// rational arithmetic by repeated application of the montee operator to a
// truncated power, plus their scaled/shifted 1-D form used as a basis.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icsrbf/error.hpp"
#include "icsrbf/polynomial.hpp"

namespace icsrbf {

using Rational = boost::multiprecision::cpp_rational;
using RationalPolynomial = Polynomial<Rational>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Coefficients of (1 - r)^l on [0, 1].
inline RationalPolynomial truncated_power(int l) {
  if (l < 1) throw InvalidParameter("truncated_power: exponent must be >= 1, got " + std::to_string(l));
  const RationalPolynomial one_minus_r{Rational(1), Rational(-1)};
  RationalPolynomial out = RationalPolynomial::constant(Rational(1));
  for (int i = 0; i < l; ++i) out = out * one_minus_r;
  return out;
}

/// Montee operator restricted to [0, 1]: r -> int_r^1 t * poly(t) dt.
inline RationalPolynomial montee(const RationalPolynomial& poly) {
  const RationalPolynomial t_times = RationalPolynomial::monomial(1) * poly;
  const RationalPolynomial antider = t_times.integral();
  return RationalPolynomial::constant(antider(Rational(1))) - antider;
}

namespace detail {

// q(u) = p(1 - u), exact.
inline RationalPolynomial reflect(const RationalPolynomial& p) {
  const RationalPolynomial one_minus_u{Rational(1), Rational(-1)};
  RationalPolynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * one_minus_u + RationalPolynomial::constant(*it);
  return acc;
}

inline Polynomial<double> to_double_poly(const RationalPolynomial& p) {
  return p.cast<double>([](const Rational& q) { return to_double(q); });
}

}  // namespace detail

/// Wendland function phi_{s,k}(r) = p_{s,k}(r) on [0,1], zero for r >= 1,
/// normalized so that phi(0) = 1. Immutable after construction.
class WendlandKernel {
 public:
  WendlandKernel(int s, int k) : s_(s), k_(k) {
    if (s < 1) throw InvalidParameter("wendland: space dimension s must be >= 1");
    if (k < 0) throw InvalidParameter("wendland: smoothness k must be >= 0");
    l_ = s / 2 + k + 1;
    RationalPolynomial p = truncated_power(l_);
    for (int i = 0; i < k; ++i) p = montee(p);
    exact_ = (Rational(1) / p(Rational(0))) * p;

    // Evaluation happens in u = 1 - r, where p(r) = u^(l+k) * (...) has
    // small, non-cancelling coefficients near the support edge.
    RationalPolynomial shifted = detail::reflect(exact_);
    for (int order = 0; order <= 2 * k_; ++order) {
      shifted_derivs_.push_back(detail::to_double_poly(shifted).coeffs());
      shifted = shifted.derivative();
    }
    first_integral_exact_ = exact_.integral();
    second_integral_exact_ = first_integral_exact_.integral();
    first_integral_ = detail::to_double_poly(first_integral_exact_);
    second_integral_ = detail::to_double_poly(second_integral_exact_);
    full_first_ = to_double(first_integral_exact_(Rational(1)));
    full_second_ = to_double(second_integral_exact_(Rational(1)));
  }

  int s() const noexcept { return s_; }
  int k() const noexcept { return k_; }
  /// Exponent of the truncated power the construction starts from.
  int l() const noexcept { return l_; }
  int smoothness() const noexcept { return 2 * k_; }
  std::size_t degree() const noexcept { return exact_.degree(); }

  /// Exact coefficients of p_{s,k} in powers of r.
  const RationalPolynomial& exact_polynomial() const noexcept { return exact_; }

  double operator()(double r) const noexcept { return derivative(r, 0); }

  /// d^order/dr^order phi(r) for r >= 0; 0 for r >= 1. Order must not exceed 2k.
  double derivative(double r, int order) const {
    if (order < 0 || order > smoothness())
      throw SmoothnessError("kernel derivative of order " + std::to_string(order) + " exceeds smoothness C^" +
                            std::to_string(smoothness()));
    if (r >= 1.0) return 0.0;
    const double u = 1.0 - r;
    const double v = horner(shifted_derivs_[static_cast<std::size_t>(order)], u);
    return (order % 2 == 0) ? v : -v;
  }

  /// int_0^min(r,1) p(t) dt.
  double integral(double r) const noexcept { return r >= 1.0 ? full_first_ : first_integral_(r); }

  /// int_0^r int_0^u phi(t) dt du for r >= 0, continued linearly past r = 1.
  double second_integral(double r) const noexcept {
    if (r <= 1.0) return second_integral_(r);
    return full_second_ + (r - 1.0) * full_first_;
  }

  const RationalPolynomial& exact_first_integral() const noexcept { return first_integral_exact_; }

 private:
  int s_{};
  int k_{};
  int l_{};
  RationalPolynomial exact_;
  RationalPolynomial first_integral_exact_;
  RationalPolynomial second_integral_exact_;
  std::vector<std::vector<double>> shifted_derivs_;
  Polynomial<double> first_integral_;
  Polynomial<double> second_integral_;
  double full_first_{};
  double full_second_{};
};

/// Memoized phi_{s,k}. The returned reference stays valid for the program lifetime.
inline const WendlandKernel& wendland(int s, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const WendlandKernel>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{s, k}];
  if (!slot) {
    try {
      slot = std::make_unique<const WendlandKernel>(s, k);
    } catch (...) {
      cache.erase({s, k});
      throw;
    }
  }
  return *slot;
}

/// The kernel used throughout the solver: phi_{3,3}, i.e. k = 3, l = 5.
inline const WendlandKernel& default_kernel() { return wendland(3, 3); }

/// phi(|x - center| / radius) as a function of the domain coordinate x.
class ScaledKernel {
 public:
  ScaledKernel(const WendlandKernel& base, double radius, double center)
      : base_(&base), radius_(radius), center_(center) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidParameter("support radius must be positive");
  }

  const WendlandKernel& base() const noexcept { return *base_; }
  double radius() const noexcept { return radius_; }
  double center() const noexcept { return center_; }

  /// d^deriv/dx^deriv phi(|x - center| / radius). At x == center odd
  /// derivatives are 0 (the kernel is even).
  double eval(double x, int deriv = 0) const {
    if (deriv < 0 || deriv > base_->smoothness())
      throw SmoothnessError("derivative order " + std::to_string(deriv) + " exceeds kernel smoothness C^" +
                            std::to_string(base_->smoothness()));
    const double d = x - center_;
    const double r = std::abs(d) / radius_;
    if (r >= 1.0) return 0.0;
    if (deriv == 0) return base_->derivative(r, 0);
    if (deriv % 2 == 1 && d == 0.0) return 0.0;
    const double sign = (deriv % 2 == 1 && d < 0.0) ? -1.0 : 1.0;
    return sign * base_->derivative(r, deriv) / std::pow(radius_, deriv);
  }

  double operator()(double x) const { return eval(x, 0); }

 private:
  const WendlandKernel* base_;
  double radius_;
  double center_;
};

/// Exact integrals of a ScaledKernel from 0:
///   value(x)    = int_0^x phi_i(t) dt
///   integral(x) = int_0^x int_0^t phi_i(s) ds dt
/// Both are piecewise polynomials with joints at center +- radius.
class KernelAntiderivative {
 public:
  explicit KernelAntiderivative(const ScaledKernel& kernel)
      : base_(&kernel.base()), radius_(kernel.radius()), center_(kernel.center()) {
    g_at_origin_ = g(-center_);
    h_at_origin_ = h(-center_);
  }

  double operator()(double x) const { return value(x); }
  double value(double x) const { return g(x - center_) - g_at_origin_; }
  double integral(double x) const { return h(x - center_) - h_at_origin_ - x * g_at_origin_; }

  /// int_0^inf phi_i: the constant reached right of the support.
  double plateau() const { return value(center_ + radius_); }

  /// Joints of the piecewise representation, clipped to [0, inf).
  std::vector<double> breakpoints() const {
    std::vector<double> out;
    for (double b : {center_ - radius_, center_, center_ + radius_})
      if (b > 0.0) out.push_back(b);
    return out;
  }

 private:
  // g(u) = int_0^u phi(|v|/rho) dv (odd in u)
  double g(double u) const {
    const double r = std::abs(u) / radius_;
    const double v = radius_ * base_->integral(r);
    return u < 0.0 ? -v : v;
  }
  // h(u) = int_0^u g(v) dv (even in u)
  double h(double u) const { return radius_ * radius_ * base_->second_integral(std::abs(u) / radius_); }

  const WendlandKernel* base_;
  double radius_;
  double center_;
  double g_at_origin_{};
  double h_at_origin_{};
};

inline KernelAntiderivative antiderivative(const ScaledKernel& kernel) { return KernelAntiderivative(kernel); }

/// A(j, i) = phi(|points_j - centers_i| / radius).
inline Eigen::MatrixXd interpolation_matrix(std::span<const double> centers, std::span<const double> points,
                                            double radius, const WendlandKernel& kernel) {
  if (centers.size() != points.size())
    throw InvalidParameter("interpolation_matrix: centers and points must have equal length");
  if (!(radius > 0.0)) throw InvalidParameter("interpolation_matrix: support radius must be positive");
  std::vector<double> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidParameter("interpolation_matrix: duplicate points make the system singular");

  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      a(j, i) = kernel(std::abs(points[static_cast<std::size_t>(j)] - centers[static_cast<std::size_t>(i)]) / radius);
  return a;
}

}  // namespace icsrbf
