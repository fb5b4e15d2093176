// icsrbf: solve Lane-Emden type problems, reproduce the comparison tables,
// and sweep the collocation size.
//
// Exit codes: 0 ok, 1 configuration error, 2 solver failure. Errors are
// written to stderr as a single JSON object.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "icsrbf/icsrbf.hpp"

namespace {

using icsrbf::format_double;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFailure : std::runtime_error {
  SolverFailure(const std::string& what, json details) : std::runtime_error(what), details(std::move(details)) {}
  json details;
};

struct RunConfig {
  std::string problem = "lane-emden";
  double m = 0.0;
  double sigma = 0.1;
  std::optional<int> n;
  std::optional<double> rw;
  std::optional<double> length;
  std::optional<double> gamma;
  int kernel_s = 3;
  int kernel_k = 3;
  int quad_order = icsrbf::kDefaultQuadratureOrder;
  double tol = 1e-12;
  int max_iter = 50;
  int samples = 600;
  std::string output;
  std::string format = "csv";
  bool no_timestamp = false;
  std::string config_path;
  // table
  int table_id = 0;
  std::optional<std::string> source;
  // sweep
  std::string n_list;
  bool parallel = true;
};

double param_of(const RunConfig& c) { return c.problem == "white-dwarf" ? c.sigma : c.m; }

// Fills every field whose flag was not given on the command line from the JSON file.
void merge_json_config(RunConfig& c, const CLI::App& app) {
  if (c.config_path.empty()) return;
  std::ifstream in(c.config_path);
  if (!in) throw ConfigError("cannot open config file " + c.config_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file " + c.config_path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  auto given = [&](const std::string& flag) {
    for (const CLI::App* a = &app; a; a = a->get_parent())
      if (const auto* o = a->get_option_no_throw("--" + flag); o && o->count() > 0) return true;
    return false;
  };
  for (const auto& [key, value] : j.items()) {
    try {
      if (given(key)) continue;
      if (key == "problem") c.problem = value.get<std::string>();
      else if (key == "m") c.m = value.get<double>();
      else if (key == "sigma") c.sigma = value.get<double>();
      else if (key == "N") c.n = value.get<int>();
      else if (key == "rw") c.rw = value.get<double>();
      else if (key == "L") c.length = value.get<double>();
      else if (key == "gamma") c.gamma = value.get<double>();
      else if (key == "kernel-s") c.kernel_s = value.get<int>();
      else if (key == "kernel-k") c.kernel_k = value.get<int>();
      else if (key == "quad-order") c.quad_order = value.get<int>();
      else if (key == "tol") c.tol = value.get<double>();
      else if (key == "max-iter") c.max_iter = value.get<int>();
      else if (key == "samples") c.samples = value.get<int>();
      else if (key == "output") c.output = value.get<std::string>();
      else if (key == "format") c.format = value.get<std::string>();
      else if (key == "no-timestamp") c.no_timestamp = value.get<bool>();
      else if (key == "id") c.table_id = value.get<int>();
      else if (key == "source") c.source = value.get<std::string>();
      else if (key == "N-list") c.n_list = value.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const json::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

icsrbf::ProblemInstance make_instance(const RunConfig& c) {
  const auto& names = icsrbf::problem_names();
  if (std::find(names.begin(), names.end(), c.problem) == names.end())
    throw ConfigError("unknown problem '" + c.problem + "'");
  try {
    return icsrbf::make_problem(c.problem, param_of(c));
  } catch (const icsrbf::InvalidParameter& e) {
    throw ConfigError(e.what());
  }
}

icsrbf::SetupParams make_params(const RunConfig& c, const icsrbf::ProblemInstance& inst) {
  icsrbf::SetupParams p = inst.defaults;
  if (c.n) p.n = *c.n;
  if (c.rw) p.support_radius = *c.rw;
  if (c.length) p.length = *c.length;
  if (c.gamma) p.gamma = *c.gamma;
  p.kernel_s = c.kernel_s;
  p.kernel_k = c.kernel_k;
  p.quadrature_order = c.quad_order;
  if (p.n < 2 || p.n > 1000) throw ConfigError("N must lie in [2, 1000], got " + std::to_string(p.n));
  if (!(p.support_radius > 0.0) || !std::isfinite(p.support_radius)) throw ConfigError("rw must be positive");
  if (!(p.length > 0.0) || !std::isfinite(p.length)) throw ConfigError("L must be positive");
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma)) throw ConfigError("gamma must be positive");
  if (p.kernel_s < 1 || p.kernel_s > 9) throw ConfigError("kernel-s must lie in [1, 9]");
  if (p.kernel_k < 1 || p.kernel_k > 8) throw ConfigError("kernel-k must lie in [1, 8]");
  if (p.quadrature_order < 1 || p.quadrature_order > 1024) throw ConfigError("quad-order must lie in [1, 1024]");
  return p;
}

icsrbf::SolveOptions make_solve_options(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw ConfigError("tol must be positive");
  if (c.max_iter < 1) throw ConfigError("max-iter must be >= 1");
  icsrbf::SolveOptions o;
  o.tol = c.tol;
  o.max_iter = c.max_iter;
  return o;
}

void check_format(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json, got '" + c.format + "'");
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + c.output);
  out << text;
}

json setup_json(const icsrbf::ProblemInstance& inst, const icsrbf::SetupParams& p) {
  return {{"problem", inst.id},       {"param", inst.param()},        {"N", p.n},
          {"r_omega", p.support_radius}, {"L", p.length},              {"gamma", p.gamma},
          {"kernel_s", p.kernel_s},   {"kernel_k", p.kernel_k},       {"quad_order", p.quadrature_order}};
}

json diagnostics_json(const icsrbf::Diagnostics& d) {
  return {{"converged", d.converged},     {"iterations", d.iterations},   {"residual_inf", d.residual_inf},
          {"residual_2", d.residual_2},   {"last_step_inf", d.last_step_inf}, {"message", d.message}};
}

json number_or_null(std::optional<double> v) { return v && std::isfinite(*v) ? json(*v) : json(nullptr); }

int cmd_solve(const RunConfig& c) {
  check_format(c);
  const auto inst = make_instance(c);
  const auto params = make_params(c, inst);
  const auto options = make_solve_options(c);
  if (c.samples < 1) throw ConfigError("samples must be >= 1");

  std::optional<icsrbf::Solution> sol;
  try {
    sol.emplace(icsrbf::solve(inst.spec, icsrbf::make_setup(params), options));
  } catch (const icsrbf::DomainError& e) {
    throw SolverFailure(e.what(), {{"x", e.x()}, {"y", e.y()}});
  } catch (const icsrbf::SolverError& e) {
    throw SolverFailure(e.what(), json::object());
  }
  if (!sol->converged()) throw SolverFailure("solver did not converge", diagnostics_json(sol->diagnostics()));

  const auto zero = icsrbf::first_zero(*sol, params.length);
  std::ostringstream os;
  if (c.format == "csv") {
    if (!c.no_timestamp) os << "# generated: " << timestamp() << '\n';
    os << "# problem: " << inst.id << '\n' << "# param: " << format_double(inst.param()) << '\n';
    os << "# N: " << params.n << '\n'
       << "# r_omega: " << format_double(params.support_radius) << '\n'
       << "# L: " << format_double(params.length) << '\n'
       << "# gamma: " << format_double(params.gamma) << '\n';
    const auto& d = sol->diagnostics();
    os << "# converged: " << (d.converged ? "true" : "false") << '\n'
       << "# iterations: " << d.iterations << '\n'
       << "# residual_inf: " << format_double(d.residual_inf) << '\n'
       << "# first_zero: " << (zero ? format_double(*zero) : "none") << '\n';
    os << "x,y,dy,d2y,residual\n";
  }
  json samples = json::array();
  for (int i = 0; i <= c.samples; ++i) {
    const double x = params.length * i / c.samples;
    const double y = sol->y(x), dy = sol->dy(x), d2y = sol->d2y(x), res = sol->residual(x);
    if (c.format == "csv")
      os << format_double(x) << ',' << format_double(y) << ',' << format_double(dy) << ',' << format_double(d2y)
         << ',' << format_double(res) << '\n';
    else
      samples.push_back({{"x", x}, {"y", y}, {"dy", dy}, {"d2y", d2y}, {"residual", res}});
  }
  if (c.format == "json") {
    json j{{"setup", setup_json(inst, params)},
           {"diagnostics", diagnostics_json(sol->diagnostics())},
           {"first_zero", number_or_null(zero)},
           {"samples", samples}};
    if (!c.no_timestamp) j["generated"] = timestamp();
    os << j.dump(2) << '\n';
  }
  emit(c, os.str());
  return kExitOk;
}

int cmd_table(const RunConfig& c) {
  check_format(c);
  if (!icsrbf::valid_table_id(c.table_id))
    throw ConfigError("unknown table id " + std::to_string(c.table_id) + " (expected 2..11)");
  icsrbf::ReferenceData data;
  try {
    data = icsrbf::load_reference_data();
  } catch (const icsrbf::InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  auto options = icsrbf::table_options(c.table_id);
  if (c.source) options.source = *c.source == "all" ? std::string() : *c.source;
  options.solve = make_solve_options(c);
  options.parallel = c.parallel;
  const auto reports = icsrbf::run_table(c.table_id, data, options);

  bool all_ok = true;
  for (const auto& r : reports) {
    all_ok = all_ok && r.converged;
    for (const auto& w : r.warnings)
      std::cerr << json{{"warning", w}, {"problem", r.problem}, {"param", r.param}, {"N", r.n}}.dump() << '\n';
  }
  const auto rows = icsrbf::to_rows(reports);
  std::ostringstream os;
  if (c.format == "csv") {
    if (!c.no_timestamp) os << "# generated: " << timestamp() << '\n';
    os << "# table: " << c.table_id << '\n';
    icsrbf::write_report_csv(os, rows);
  } else {
    json j{{"table", c.table_id}, {"rows", icsrbf::report_json(rows)}};
    if (!c.no_timestamp) j["generated"] = timestamp();
    os << j.dump(2) << '\n';
  }
  emit(c, os.str());
  if (!all_ok) throw SolverFailure("at least one table row did not converge", json::object());
  return kExitOk;
}

// "5,10,20" or "5:40:5" (inclusive range with step), may be combined: "5:10:1,13,16,20".
std::vector<int> parse_n_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  auto to_int = [](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw ConfigError("bad N-list entry '" + s + "'");
    }
    if (pos != s.size()) throw ConfigError("bad N-list entry '" + s + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    const int lo = to_int(item.substr(0, c1));
    const int hi = to_int(item.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
    const int step = c2 == std::string::npos ? 1 : to_int(item.substr(c2 + 1));
    if (step < 1) throw ConfigError("N-list step must be >= 1");
    for (int n = lo; n <= hi; n += step) out.push_back(n);
  }
  if (out.empty()) throw ConfigError("empty N range");
  return out;
}

struct SweepPoint {
  int n = 0;
  bool converged = false;
  int iterations = 0;
  std::optional<double> res_norm;
  std::optional<double> max_error;
  std::optional<double> first_zero;
  std::string error;
};

int cmd_sweep(const RunConfig& c) {
  check_format(c);
  const auto inst = make_instance(c);
  const auto ns = parse_n_list(c.n_list);
  std::vector<icsrbf::SetupParams> setups;
  for (int n : ns) {
    RunConfig point = c;
    point.n = n;
    setups.push_back(make_params(point, inst));
  }
  const auto options = make_solve_options(c);

  auto evaluate = [&](const icsrbf::SetupParams& p) {
    SweepPoint out;
    out.n = p.n;
    try {
      const auto sol = icsrbf::solve(inst.spec, icsrbf::make_setup(p), options);
      out.converged = sol.converged();
      out.iterations = sol.diagnostics().iterations;
      if (!out.converged) out.error = sol.diagnostics().message;
      out.res_norm = icsrbf::res_norm_2(sol);
      if (inst.has_exact()) out.max_error = icsrbf::max_error(sol, inst.exact);
      out.first_zero = icsrbf::first_zero(sol, p.length);
    } catch (const icsrbf::Error& e) {
      out.error = e.what();
    }
    return out;
  };
  std::vector<SweepPoint> points;
  if (c.parallel) {
    std::vector<std::future<SweepPoint>> jobs;
    for (const auto& p : setups) jobs.push_back(std::async(std::launch::async, evaluate, p));
    for (auto& j : jobs) points.push_back(j.get());
  } else {
    for (const auto& p : setups) points.push_back(evaluate(p));
  }

  auto opt = [](std::optional<double> v) { return v ? format_double(*v) : std::string(); };
  std::ostringstream os;
  const auto& base = setups.front();
  if (c.format == "csv") {
    if (!c.no_timestamp) os << "# generated: " << timestamp() << '\n';
    os << "problem,param,N,r_omega,L,gamma,converged,iterations,res_norm_2,max_error,first_zero\n";
    for (const auto& pt : points)
      os << inst.id << ',' << format_double(inst.param()) << ',' << pt.n << ',' << format_double(base.support_radius)
         << ',' << format_double(base.length) << ',' << format_double(base.gamma) << ',' << (pt.converged ? 1 : 0)
         << ',' << pt.iterations << ',' << opt(pt.res_norm) << ',' << opt(pt.max_error) << ','
         << opt(pt.first_zero) << '\n';
  } else {
    json rows = json::array();
    for (const auto& pt : points)
      rows.push_back({{"problem", inst.id},
                      {"param", inst.param()},
                      {"N", pt.n},
                      {"r_omega", base.support_radius},
                      {"L", base.length},
                      {"gamma", base.gamma},
                      {"converged", pt.converged},
                      {"iterations", pt.iterations},
                      {"res_norm_2", number_or_null(pt.res_norm)},
                      {"max_error", number_or_null(pt.max_error)},
                      {"first_zero", number_or_null(pt.first_zero)}});
    json j{{"rows", rows}};
    if (!c.no_timestamp) j["generated"] = timestamp();
    os << j.dump(2) << '\n';
  }
  emit(c, os.str());

  bool any_ok = false;
  for (const auto& pt : points) {
    any_ok = any_ok || pt.converged;
    if (!pt.error.empty()) std::cerr << json{{"warning", pt.error}, {"N", pt.n}}.dump() << '\n';
  }
  if (!any_ok) throw SolverFailure("all sweep points failed", json::object());
  return kExitOk;
}

void add_common(CLI::App& app, RunConfig& c) {
  app.add_option("--problem", c.problem, "lane-emden | isothermal | white-dwarf | sinh | sin");
  app.add_option("--m", c.m, "Lane-Emden index m >= 0");
  app.add_option("--sigma", c.sigma, "White Dwarf parameter in [0, 1)");
  app.add_option("--N", c.n, "number of collocation points");
  app.add_option("--rw", c.rw, "kernel support radius");
  app.add_option("--L", c.length, "domain length");
  app.add_option("--gamma", c.gamma, "grid grading exponent");
  app.add_option("--kernel-s", c.kernel_s, "Wendland dimension parameter s");
  app.add_option("--kernel-k", c.kernel_k, "Wendland smoothness parameter k (C^{2k})");
  app.add_option("--quad-order", c.quad_order, "Gauss-Legendre points per integral");
  app.add_option("--tol", c.tol, "Newton tolerance");
  app.add_option("--max-iter", c.max_iter, "Newton iteration limit");
  app.add_option("--output,-o", c.output, "output file (default stdout)");
  app.add_option("--format", c.format, "csv | json");
  app.add_flag("--no-timestamp", c.no_timestamp, "omit the generation timestamp");
  app.add_option("--config", c.config_path, "JSON config file; flags override its values");
}

void print_error(const std::string& kind, const std::string& message, const json& details = json::object()) {
  json j{{"error", kind}, {"message", message}};
  if (!details.empty()) j["details"] = details;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indirect compactly supported RBF collocation for Lane-Emden type equations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* solve = app.add_subcommand("solve", "solve one problem and write solution samples");
  add_common(*solve, cfg);
  solve->add_option("--samples", cfg.samples, "sample intervals on [0, L]");

  auto* table = app.add_subcommand("table", "reproduce a comparison table (2..11)");
  add_common(*table, cfg);
  table->add_option("--id", cfg.table_id, "table id")->required();
  table->add_option("--source", cfg.source, "reference column, or 'all'");

  auto* sweep = app.add_subcommand("sweep", "solve over a list of N values");
  add_common(*sweep, cfg);
  sweep->add_option("--N-list", cfg.n_list, "N values, e.g. 5,10,20 or 5:40:5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("config", e.what());
    return kExitConfig;
  }

  try {
    const CLI::App* active = solve->parsed() ? solve : table->parsed() ? table : sweep;
    merge_json_config(cfg, *active);
    if (active == solve) return cmd_solve(cfg);
    if (active == table) return cmd_table(cfg);
    if (cfg.n_list.empty()) throw ConfigError("sweep needs --N-list");
    return cmd_sweep(cfg);
  } catch (const ConfigError& e) {
    print_error("config", e.what());
    return kExitConfig;
  } catch (const icsrbf::InvalidParameter& e) {
    print_error("config", e.what());
    return kExitConfig;
  } catch (const SolverFailure& e) {
    print_error("solver", e.what(), e.details);
    return kExitSolver;
  } catch (const icsrbf::Error& e) {
    print_error("solver", e.what());
    return kExitSolver;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kExitSolver;
  }
}
