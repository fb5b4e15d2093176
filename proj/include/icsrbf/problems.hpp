#pragma once

// The five Lane-Emden type problem families, with their closed-form
// solutions where they exist, truncated series from the literature, and
// the published comparison values.

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "icsrbf/collocation.hpp"
#include "icsrbf/error.hpp"
#include "icsrbf/problem.hpp"
#include "icsrbf/reference_data.hpp"

namespace icsrbf {

struct ReferenceValue {
  std::string problem;
  double param = 0.0;
  double x = 0.0;
  double y_ref = 0.0;
  std::string source;
  int table_id = 0;
};

struct ProblemInstance {
  std::string id;  ///< lane-emden | isothermal | white-dwarf | sinh | sin
  ProblemSpec spec;
  std::map<std::string, double> params;
  std::function<double(double)> exact;   ///< empty when no closed form exists
  std::function<double(double)> series;  ///< empty when no series is published
  std::string series_note;
  double series_validity = 0.0;  ///< series is trusted on [0, series_validity]
  std::vector<ReferenceValue> reference_values;
  SetupParams defaults;

  bool has_exact() const noexcept { return static_cast<bool>(exact); }
  bool has_series() const noexcept { return static_cast<bool>(series); }
  /// m for lane-emden, sigma for white-dwarf, 0 otherwise.
  double param() const {
    if (auto it = params.find("m"); it != params.end()) return it->second;
    if (auto it = params.find("sigma"); it != params.end()) return it->second;
    return 0.0;
  }
};

inline std::vector<ReferenceValue> reference_values_for(std::string_view problem, double param) {
  std::vector<ReferenceValue> out;
  for (const auto& e : kReferenceTable)
    if (e.problem == problem && e.param == param)
      out.push_back({std::string(e.problem), e.param, e.x, e.y_ref, std::string(e.source), e.table_id});
  return out;
}

namespace detail {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline bool is_integer(double v) { return std::floor(v) == v; }

inline SetupParams family_setup(int n, double radius, double length, double gamma) {
  SetupParams p;
  p.n = n;
  p.support_radius = radius;
  p.length = length;
  p.gamma = gamma;
  return p;
}

}  // namespace detail

/// y'' + (2/x) y' + y^m = 0, y(0) = 1, y'(0) = 0.
///
/// Past the first zero y < 0; integer m keeps the true power, non-integer m
/// uses the odd extension sign(y)|y|^m.
inline ProblemInstance standard_lane_emden(double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw InvalidParameter("lane-emden: m must be a finite value >= 0");
  ProblemInstance inst;
  inst.id = "lane-emden";
  inst.params["m"] = m;
  inst.spec.label = "lane-emden(m=" + std::to_string(m) + ")";
  inst.spec.alpha = 2.0;
  inst.spec.A = 1.0;
  inst.spec.B = 0.0;
  if (m == 0.0) {
    inst.spec.q = [](double) { return 1.0; };
    inst.spec.dq = [](double) { return 0.0; };
  } else if (detail::is_integer(m)) {
    inst.spec.q = [m](double y) { return std::pow(y, m); };
    inst.spec.dq = [m](double y) { return m * std::pow(y, m - 1.0); };
  } else {
    inst.spec.q = [m](double y) { return std::copysign(std::pow(std::abs(y), m), y); };
    inst.spec.dq = [m](double y) { return m * std::pow(std::abs(y), m - 1.0); };
  }
  if (m == 0.0) {
    inst.exact = [](double x) { return 1.0 - x * x / 6.0; };
  } else if (m == 1.0) {
    inst.exact = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
  } else if (m == 5.0) {
    inst.exact = [](double x) { return 1.0 / std::sqrt(1.0 + x * x / 3.0); };
  }
  inst.reference_values = reference_values_for(inst.id, m);
  inst.defaults = detail::family_setup(20, 4.0, 6.0, 1.5);
  return inst;
}

/// y'' + (2/x) y' + e^y = 0, y(0) = y'(0) = 0.
inline ProblemInstance isothermal_gas_sphere() {
  ProblemInstance inst;
  inst.id = "isothermal";
  inst.spec.label = "isothermal";
  inst.spec.A = 0.0;
  inst.spec.B = 0.0;
  inst.spec.q = [](double y) { return std::exp(y); };
  inst.spec.dq = [](double y) { return std::exp(y); };
  // Adomian decomposition series (Wazwaz).
  inst.series = [](double x) {
    const double x2 = x * x;
    return -x2 / 6.0 + std::pow(x2, 2) / 120.0 - 8.0 * std::pow(x2, 3) / (21.0 * 720.0) +
           122.0 * std::pow(x2, 4) / (81.0 * 40320.0) - 61.0 * 67.0 * std::pow(x2, 5) / (495.0 * 3628800.0);
  };
  inst.series_note = "Adomian decomposition series through x^10 (Wazwaz)";
  inst.series_validity = 0.5;
  inst.reference_values = reference_values_for(inst.id, 0.0);
  inst.defaults = detail::family_setup(40, 6.5, 2.5, 1.7);
  return inst;
}

/// y'' + (2/x) y' + (y^2 - sigma)^{3/2} = 0, y(0) = 1, y'(0) = 0.
inline ProblemInstance white_dwarf(double sigma) {
  if (!(sigma >= 0.0 && sigma < 1.0)) throw InvalidParameter("white-dwarf: sigma must lie in [0, 1)");
  ProblemInstance inst;
  inst.id = "white-dwarf";
  inst.params["sigma"] = sigma;
  inst.spec.label = "white-dwarf(sigma=" + std::to_string(sigma) + ")";
  inst.spec.A = 1.0;
  inst.spec.B = 0.0;
  inst.spec.q = [sigma](double y) {
    const double base = y * y - sigma;
    return base < 0.0 ? detail::kNaN : base * std::sqrt(base);
  };
  inst.spec.dq = [sigma](double y) {
    const double base = y * y - sigma;
    return base < 0.0 ? detail::kNaN : 3.0 * y * std::sqrt(base);
  };
  const double w = std::sqrt(1.0 - sigma);
  // Modified homotopy analysis series (Singh), w = sqrt(1 - sigma).
  inst.series = [w](double x) {
    const double x2 = x * x;
    return 1.0 - std::pow(w, 3) * x2 / 6.0 + std::pow(w, 4) * x2 * x2 / 40.0 -
           std::pow(w, 5) * (5.0 * w * w + 14.0) * x2 * x2 * x2 / 5040.0;
  };
  inst.series_note = "modified homotopy analysis series through x^6 (Singh)";
  inst.series_validity = 0.5;
  inst.reference_values = reference_values_for(inst.id, sigma);
  inst.defaults = detail::family_setup(20, 0.5, 1.0, 1.5);
  return inst;
}

/// y'' + (2/x) y' + sinh(y) = 0, y(0) = 1, y'(0) = 0.
inline ProblemInstance sinh_problem() {
  ProblemInstance inst;
  inst.id = "sinh";
  inst.spec.label = "sinh";
  inst.spec.q = [](double y) { return std::sinh(y); };
  inst.spec.dq = [](double y) { return std::cosh(y); };
  inst.series = [](double x) {
    const double e = std::numbers::e;
    const double e2 = e * e;
    const double x2 = x * x;
    return 1.0 - (e2 - 1.0) * x2 / (12.0 * e) + (e2 * e2 - 1.0) * x2 * x2 / (480.0 * e2) -
           (2.0 * std::pow(e, 6) + 3.0 * e2 - 3.0 * e2 * e2 - 2.0) * std::pow(x2, 3) / (30240.0 * std::pow(e, 3)) +
           (61.0 * std::pow(e, 8) - 104.0 * std::pow(e, 6) + 104.0 * e2 - 61.0) * std::pow(x2, 4) /
               (26127360.0 * std::pow(e, 4));
  };
  inst.series_note = "Adomian decomposition series through x^8 (Wazwaz)";
  inst.series_validity = 0.5;
  inst.reference_values = reference_values_for(inst.id, 0.0);
  inst.defaults = detail::family_setup(20, 1.0, 2.0, 1.7);
  return inst;
}

/// y'' + (2/x) y' + sin(y) = 0, y(0) = 1, y'(0) = 0.
inline ProblemInstance sin_problem() {
  ProblemInstance inst;
  inst.id = "sin";
  inst.spec.label = "sin";
  inst.spec.q = [](double y) { return std::sin(y); };
  inst.spec.dq = [](double y) { return std::cos(y); };
  inst.series = [](double x) {
    const double k1 = std::sin(1.0);
    const double k2 = std::cos(1.0);
    const double x2 = x * x;
    return 1.0 - k1 * x2 / 6.0 + k1 * k2 * x2 * x2 / 120.0 +
           k1 * (k1 * k1 / 3024.0 - k2 * k2 / 5040.0) * std::pow(x2, 3) +
           k1 * k2 * (-113.0 * k1 * k1 / 3265920.0 + k2 * k2 / 362880.0) * std::pow(x2, 4);
  };
  inst.series_note = "Adomian decomposition series through x^8 (Wazwaz), k1 = sin 1, k2 = cos 1";
  inst.series_validity = 0.5;
  inst.reference_values = reference_values_for(inst.id, 0.0);
  inst.defaults = detail::family_setup(20, 2.0, 2.0, 1.6);
  return inst;
}

inline const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names{"lane-emden", "isothermal", "white-dwarf", "sinh", "sin"};
  return names;
}

/// Registry lookup. `param` is m for lane-emden and sigma for white-dwarf,
/// ignored otherwise.
inline ProblemInstance make_problem(std::string_view name, double param) {
  if (name == "lane-emden") return standard_lane_emden(param);
  if (name == "isothermal") return isothermal_gas_sphere();
  if (name == "white-dwarf") return white_dwarf(param);
  if (name == "sinh") return sinh_problem();
  if (name == "sin") return sin_problem();
  throw InvalidParameter("unknown problem '" + std::string(name) + "'");
}

/// Default (N, r_omega, L, gamma) for a family.
inline SetupParams default_setup(std::string_view name, double param) { return make_problem(name, param).defaults; }

}  // namespace icsrbf
