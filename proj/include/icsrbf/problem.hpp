#pragma once

#include <functional>
#include <string>

namespace icsrbf {

/// y'' + (alpha/x) y' + p(x) q(y) = h(x),  y(0) = A,  y'(0) = B.
///
/// `q` and `dq` return NaN where the nonlinearity has no real value; the
/// solver turns that into a DomainError carrying x and y.
struct ProblemSpec {
  std::string label;
  double alpha = 2.0;
  std::function<double(double)> p = [](double) { return 1.0; };
  std::function<double(double)> q;
  std::function<double(double)> dq;
  std::function<double(double)> h = [](double) { return 0.0; };
  double A = 1.0;
  double B = 0.0;
};

}  // namespace icsrbf
