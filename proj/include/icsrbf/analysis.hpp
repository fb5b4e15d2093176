#pragma once

// Post-processing of solutions: first zero, error against closed forms,
// discrete residual norm, and comparison reports in CSV / JSON form.

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "icsrbf/collocation.hpp"
#include "icsrbf/error.hpp"
#include "icsrbf/problems.hpp"

namespace icsrbf {

inline constexpr int kZeroScanPoints = 2000;
inline constexpr int kErrorGridPoints = 500;
inline constexpr int kResidualGridPoints = 200;

/// Smallest x in (0, search_limit] with f(x) = 0: scan a uniform grid for the
/// first sign change, then bisect to an interval below 1e-12. Returns
/// nullopt when f keeps one sign on the grid.
template <class F>
std::optional<double> first_zero(F&& f, double search_limit, int scan_points = kZeroScanPoints) {
  if (!(search_limit > 0.0)) throw InvalidParameter("first_zero: search limit must be positive");
  if (scan_points < 1) throw InvalidParameter("first_zero: need at least one scan point");
  const double h = search_limit / scan_points;
  double a = h;
  double fa = f(a);
  if (fa == 0.0) return a;
  for (int i = 2; i <= scan_points; ++i) {
    const double b_grid = (i == scan_points) ? search_limit : h * i;
    const double fb_grid = f(b_grid);
    if (fb_grid == 0.0) return b_grid;
    if (std::signbit(fa) != std::signbit(fb_grid)) {
      double lo = a;
      double hi = b_grid;
      double flo = fa;
      while (hi - lo >= 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    a = b_grid;
    fa = fb_grid;
  }
  return std::nullopt;
}

inline std::optional<double> first_zero(const Solution& sol, double search_limit) {
  return first_zero([&](double x) { return sol.y(x); }, search_limit);
}

/// M uniform points L*i/M, i = 1..M.
inline std::vector<double> uniform_grid(double length, int m) {
  if (m < 1) throw InvalidParameter("uniform_grid: need at least one point");
  std::vector<double> xs(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) xs[static_cast<std::size_t>(i - 1)] = length * i / m;
  return xs;
}

template <class F, class G>
double max_error(F&& computed, G&& exact, std::span<const double> xs) {
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(computed(x) - exact(x)));
  return worst;
}

/// Max |y - exact| over 500 uniform points on (0, L].
inline double max_error(const Solution& sol, const std::function<double(double)>& exact) {
  const auto xs = uniform_grid(sol.setup().length(), kErrorGridPoints);
  return max_error([&](double x) { return sol.y(x); }, exact, xs);
}

inline double max_error(const Solution& sol, const std::function<double(double)>& exact,
                        std::span<const double> xs) {
  return max_error([&](double x) { return sol.y(x); }, exact, xs);
}

/// sqrt(sum_i Res(t_i)^2) over M uniform points t_i on (0, L]. Unscaled.
inline double res_norm_2(const Solution& sol, int m = kResidualGridPoints) {
  if (m < 2) throw InvalidParameter("res_norm_2: grid needs at least 2 points");
  double acc = 0.0;
  for (double t : uniform_grid(sol.setup().length(), m)) {
    const double r = sol.residual(t);
    acc += r * r;
  }
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Reports

/// One compared quantity: a pointwise value `y@x`, `first_zero`,
/// `max_error` or `res_norm_2`, optionally against a published reference.
struct Comparison {
  std::string metric;
  double value = 0.0;
  std::optional<double> reference;
  std::string source;

  double abs_error() const {
    return reference ? std::abs(value - *reference) : std::numeric_limits<double>::quiet_NaN();
  }
};

struct MetricsReport {
  std::string problem;
  double param = 0.0;
  int n = 0;
  double support_radius = 0.0;
  double length = 0.0;
  double gamma = 0.0;
  bool converged = false;
  std::optional<double> first_zero;
  std::optional<double> max_error;
  std::optional<double> res_norm_2;
  std::vector<Comparison> comparisons;
  std::vector<std::string> warnings;
};

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  // strtod rather than from_chars: accepts forms such as "1.869e-00" and "+1".
  std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size())
    throw InvalidParameter("cannot parse number '" + tmp + "'");
  return v;
}

inline std::string pointwise_metric(double x) { return "y@" + format_double(x); }

/// x of a `y@x` metric, nullopt for other metrics.
inline std::optional<double> pointwise_x(std::string_view metric) {
  if (metric.rfind("y@", 0) != 0) return std::nullopt;
  return parse_double(metric.substr(2));
}

inline const char* kReportCsvHeader = "problem,param,N,r_omega,L,gamma,metric,value,reference,abs_error,source";

struct ReportRow {
  std::string problem;
  double param = 0.0;
  int n = 0;
  double support_radius = 0.0;
  double length = 0.0;
  double gamma = 0.0;
  std::string metric;
  double value = 0.0;
  std::optional<double> reference;
  double abs_error = std::numeric_limits<double>::quiet_NaN();
  std::string source;
};

/// Flattens reports into schema rows. Summary metrics that were computed
/// but not compared against anything are emitted with an empty reference.
inline std::vector<ReportRow> to_rows(std::span<const MetricsReport> reports, bool with_status = false) {
  std::vector<ReportRow> rows;
  for (const auto& r : reports) {
    auto base = [&](std::string metric, double value, std::optional<double> ref, std::string source) {
      ReportRow row{r.problem, r.param, r.n, r.support_radius, r.length, r.gamma, std::move(metric), value, ref,
                    std::numeric_limits<double>::quiet_NaN(), std::move(source)};
      if (ref) row.abs_error = std::abs(value - *ref);
      rows.push_back(std::move(row));
    };
    auto compared = [&](std::string_view metric) {
      for (const auto& c : r.comparisons)
        if (c.metric == metric) return true;
      return false;
    };
    if (with_status) base("converged", r.converged ? 1.0 : 0.0, std::nullopt, "");
    for (const auto& c : r.comparisons) base(c.metric, c.value, c.reference, c.source);
    if (r.first_zero && !compared("first_zero")) base("first_zero", *r.first_zero, std::nullopt, "");
    if (r.max_error && !compared("max_error")) base("max_error", *r.max_error, std::nullopt, "");
    if (r.res_norm_2 && !compared("res_norm_2")) base("res_norm_2", *r.res_norm_2, std::nullopt, "");
  }
  return rows;
}

/// Rebuilds reports from rows; consecutive rows with the same setup key
/// form one report. abs_error is recomputed, never read back.
inline std::vector<MetricsReport> from_rows(std::span<const ReportRow> rows) {
  std::vector<MetricsReport> out;
  for (const auto& row : rows) {
    const bool same = !out.empty() && out.back().problem == row.problem && out.back().param == row.param &&
                      out.back().n == row.n && out.back().support_radius == row.support_radius &&
                      out.back().length == row.length && out.back().gamma == row.gamma;
    if (!same) {
      MetricsReport r;
      r.problem = row.problem;
      r.param = row.param;
      r.n = row.n;
      r.support_radius = row.support_radius;
      r.length = row.length;
      r.gamma = row.gamma;
      out.push_back(std::move(r));
    }
    auto& r = out.back();
    if (row.metric == "converged") {
      r.converged = row.value != 0.0;
      continue;
    }
    if (row.metric == "first_zero") r.first_zero = row.value;
    if (row.metric == "max_error") r.max_error = row.value;
    if (row.metric == "res_norm_2") r.res_norm_2 = row.value;
    if (row.reference || pointwise_x(row.metric))
      r.comparisons.push_back({row.metric, row.value, row.reference, row.source});
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline void write_report_csv(std::ostream& os, std::span<const ReportRow> rows) {
  os << kReportCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.problem << ',' << format_double(r.param) << ',' << r.n << ',' << format_double(r.support_radius) << ','
       << format_double(r.length) << ',' << format_double(r.gamma) << ',' << r.metric << ',' << format_double(r.value)
       << ',' << (r.reference ? format_double(*r.reference) : "") << ','
       << (r.reference ? format_double(r.abs_error) : "") << ',' << r.source << '\n';
  }
}

/// Reads the report CSV schema. Lines starting with '#' are skipped.
inline std::vector<ReportRow> read_report_csv(std::istream& is) {
  std::vector<ReportRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("problem,", 0) != 0) throw InvalidParameter("report CSV: missing header");
      header_seen = true;
      continue;
    }
    const auto f = detail::split_csv_line(line);
    if (f.size() != 11) throw InvalidParameter("report CSV: expected 11 fields, got " + std::to_string(f.size()));
    ReportRow r;
    r.problem = f[0];
    r.param = parse_double(f[1]);
    r.n = static_cast<int>(parse_double(f[2]));
    r.support_radius = parse_double(f[3]);
    r.length = parse_double(f[4]);
    r.gamma = parse_double(f[5]);
    r.metric = f[6];
    r.value = parse_double(f[7]);
    if (!f[8].empty()) r.reference = parse_double(f[8]);
    r.abs_error = r.reference ? std::abs(r.value - *r.reference) : std::numeric_limits<double>::quiet_NaN();
    r.source = f[10];
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace detail {

inline nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace detail

inline nlohmann::json report_json(std::span<const ReportRow> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"problem", r.problem},
                   {"param", r.param},
                   {"N", r.n},
                   {"r_omega", r.support_radius},
                   {"L", r.length},
                   {"gamma", r.gamma},
                   {"metric", r.metric},
                   {"value", detail::number_or_null(r.value)},
                   {"reference", r.reference ? detail::number_or_null(*r.reference) : nlohmann::json(nullptr)},
                   {"abs_error", r.reference ? detail::number_or_null(r.abs_error) : nlohmann::json(nullptr)},
                   {"source", r.source}});
  }
  return arr;
}

inline std::vector<ReportRow> rows_from_json(const nlohmann::json& arr) {
  std::vector<ReportRow> rows;
  for (const auto& o : arr) {
    ReportRow r;
    r.problem = o.at("problem").get<std::string>();
    r.param = o.at("param").get<double>();
    r.n = o.at("N").get<int>();
    r.support_radius = o.at("r_omega").get<double>();
    r.length = o.at("L").get<double>();
    r.gamma = o.at("gamma").get<double>();
    r.metric = o.at("metric").get<std::string>();
    r.value = o.at("value").is_null() ? std::numeric_limits<double>::quiet_NaN() : o.at("value").get<double>();
    if (!o.at("reference").is_null()) r.reference = o.at("reference").get<double>();
    r.abs_error = r.reference ? std::abs(r.value - *r.reference) : std::numeric_limits<double>::quiet_NaN();
    r.source = o.at("source").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Table builds

/// Reference for a convergence metric (res_norm_2 or max_error) at one N.
struct ConvergenceReference {
  int table_id = 0;
  std::string problem;
  double param = 0.0;
  int n = 0;
  std::string metric;
  double value = 0.0;
};

struct TableOptions {
  bool first_zero = false;
  bool pointwise = true;
  bool max_error = false;
  bool res_norm = false;
  /// Restricts references to one source column; empty keeps all.
  std::string source;
  /// Evaluate setups with std::async; report order is unaffected.
  bool parallel = false;
  SolveOptions solve;
};

/// First-zero references are stored as points (x = zero, y_ref = 0) of table 2.
inline bool is_first_zero_reference(const ReferenceValue& r) { return r.table_id == 2 && r.y_ref == 0.0; }

inline MetricsReport build_report(const ProblemInstance& problem, const SetupParams& params,
                                  std::span<const ReferenceValue> references,
                                  std::span<const ConvergenceReference> convergence, const TableOptions& options) {
  MetricsReport rep;
  rep.problem = problem.id;
  rep.param = problem.param();
  rep.n = params.n;
  rep.support_radius = params.support_radius;
  rep.length = params.length;
  rep.gamma = params.gamma;

  const Solution sol = solve(problem.spec, make_setup(params), options.solve);
  rep.converged = sol.converged();
  if (!rep.converged) rep.warnings.push_back("solver did not converge: " + sol.diagnostics().message);

  auto wanted = [&](const ReferenceValue& r) {
    return r.problem == problem.id && r.param == rep.param && (options.source.empty() || r.source == options.source);
  };

  bool any_reference = false;
  if (options.first_zero) {
    rep.first_zero = first_zero(sol, params.length);
    for (const auto& r : references) {
      if (!wanted(r) || !is_first_zero_reference(r)) continue;
      any_reference = true;
      rep.comparisons.push_back({"first_zero", rep.first_zero.value_or(std::numeric_limits<double>::quiet_NaN()),
                                 r.x, r.source});
    }
    if (!rep.first_zero) rep.warnings.push_back("no sign change found on (0, L]");
  }
  if (options.pointwise) {
    for (const auto& r : references) {
      if (!wanted(r) || is_first_zero_reference(r)) continue;
      if (r.x > params.length) {
        rep.warnings.push_back("reference x=" + format_double(r.x) + " lies beyond L");
        continue;
      }
      any_reference = true;
      rep.comparisons.push_back({pointwise_metric(r.x), sol.y(r.x), r.y_ref, r.source});
    }
  }
  auto attach = [&](std::string_view metric, double value) {
    for (const auto& c : convergence) {
      if (c.problem == problem.id && c.param == rep.param && c.n == params.n && c.metric == metric) {
        any_reference = true;
        rep.comparisons.push_back({std::string(metric), value, c.value, "ICSRBF"});
      }
    }
  };
  if (options.max_error) {
    if (problem.has_exact()) {
      rep.max_error = max_error(sol, problem.exact);
      attach("max_error", *rep.max_error);
    } else {
      rep.warnings.push_back("no closed-form solution for max_error");
    }
  }
  if (options.res_norm) {
    rep.res_norm_2 = res_norm_2(sol);
    attach("res_norm_2", *rep.res_norm_2);
  }
  if (!any_reference) rep.warnings.push_back("missing reference rows for " + problem.id);
  return rep;
}

/// One report per setup, in setup order.
inline std::vector<MetricsReport> build_table(const ProblemInstance& problem, std::span<const SetupParams> setups,
                                              std::span<const ReferenceValue> references,
                                              std::span<const ConvergenceReference> convergence = {},
                                              const TableOptions& options = {}) {
  std::vector<MetricsReport> out;
  out.reserve(setups.size());
  if (options.parallel) {
    std::vector<std::future<MetricsReport>> jobs;
    for (const auto& s : setups)
      jobs.push_back(std::async(std::launch::async, [&, s] {
        return build_report(problem, s, references, convergence, options);
      }));
    for (auto& j : jobs) out.push_back(j.get());
  } else {
    for (const auto& s : setups) out.push_back(build_report(problem, s, references, convergence, options));
  }
  return out;
}

}  // namespace icsrbf
