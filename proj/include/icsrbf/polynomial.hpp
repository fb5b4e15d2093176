#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace icsrbf {

/// Dense univariate polynomial with coefficients stored in ascending order,
/// `coeffs()[i]` multiplying r^i. `T` is any field-like scalar: double for
/// evaluation, an exact rational type for kernel construction.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  /// x^n
  static Polynomial monomial(std::size_t n) {
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of the polynomial; the zero polynomial reports 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  template <class U>
  U operator()(const U& r) const {
    U acc = U(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(c));
  }

  /// Antiderivative vanishing at r = 0.
  Polynomial integral() const {
    if (coeffs_.empty()) return {};
    std::vector<T> c(coeffs_.size() + 1, T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / T(static_cast<long>(i + 1));
    return Polynomial(std::move(c));
  }

  /// Converts coefficients to another scalar type.
  template <class U, class Convert>
  Polynomial<U> cast(Convert convert) const {
    std::vector<U> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(convert(v));
    return Polynomial<U>(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c(p.coeffs_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Horner evaluation of an ascending coefficient span.
inline double horner(std::span<const double> coeffs, double r) noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
  return acc;
}

}  // namespace icsrbf
