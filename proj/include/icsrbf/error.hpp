#pragma once

#include <stdexcept>
#include <string>

namespace icsrbf {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its documented range (negative order, N < 2, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A derivative order exceeds the smoothness of the kernel.
class SmoothnessError : public Error {
 public:
  using Error::Error;
};

/// The nonlinearity q(y) was evaluated outside its real domain.
class DomainError : public Error {
 public:
  DomainError(double x, double y, const std::string& what)
      : Error(what + " (x=" + std::to_string(x) + ", y=" + std::to_string(y) + ")"), x_(x), y_(y) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

 private:
  double x_;
  double y_;
};

/// Linear algebra or Newton iteration broke down (singular Jacobian, no root).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace icsrbf
