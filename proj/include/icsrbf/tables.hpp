#pragma once

// Loading of the shipped reference data and reproduction of the published
// comparison tables 2-11.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icsrbf/analysis.hpp"
#include "icsrbf/error.hpp"
#include "icsrbf/problems.hpp"

#ifndef ICSRBF_DEFAULT_REF_DIR
#define ICSRBF_DEFAULT_REF_DIR "data"
#endif

namespace icsrbf {

/// $ICSRBF_REF_DIR if set, else the data directory the build was configured with.
inline std::filesystem::path reference_dir() {
  if (const char* env = std::getenv("ICSRBF_REF_DIR"); env && *env) return env;
  return ICSRBF_DEFAULT_REF_DIR;
}

namespace detail {

inline std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                                       const std::string& expected_header) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InvalidParameter(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header) throw InvalidParameter(path.string() + ": unexpected header '" + line + "'");
  const auto width = split_csv_line(expected_header).size();
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split_csv_line(line);
    if (f.size() != width) throw InvalidParameter(path.string() + ": malformed row '" + line + "'");
    rows.push_back(std::move(f));
  }
  return rows;
}

}  // namespace detail

/// problem,param,x,y_ref,source,table_id
inline std::vector<ReferenceValue> load_reference_values(const std::filesystem::path& path) {
  std::vector<ReferenceValue> out;
  for (const auto& f : detail::read_csv(path, "problem,param,x,y_ref,source,table_id"))
    out.push_back({f[0], parse_double(f[1]), parse_double(f[2]), parse_double(f[3]), f[4], std::stoi(f[5])});
  return out;
}

/// table_id,problem,param,N,metric,value
inline std::vector<ConvergenceReference> load_convergence_references(const std::filesystem::path& path) {
  std::vector<ConvergenceReference> out;
  for (const auto& f : detail::read_csv(path, "table_id,problem,param,N,metric,value"))
    out.push_back({std::stoi(f[0]), f[1], parse_double(f[2]), std::stoi(f[3]), f[4], parse_double(f[5])});
  return out;
}

struct TableSetup {
  int table_id = 0;
  std::string problem;
  double param = 0.0;
  SetupParams setup;
};

/// table_id,problem,param,N,r_omega,L,gamma
inline std::vector<TableSetup> load_table_setups(const std::filesystem::path& path) {
  std::vector<TableSetup> out;
  for (const auto& f : detail::read_csv(path, "table_id,problem,param,N,r_omega,L,gamma")) {
    TableSetup t;
    t.table_id = std::stoi(f[0]);
    t.problem = f[1];
    t.param = parse_double(f[2]);
    t.setup.n = std::stoi(f[3]);
    t.setup.support_radius = parse_double(f[4]);
    t.setup.length = parse_double(f[5]);
    t.setup.gamma = parse_double(f[6]);
    out.push_back(std::move(t));
  }
  return out;
}

struct ReferenceData {
  std::vector<ReferenceValue> values;
  std::vector<ConvergenceReference> convergence;
  std::vector<TableSetup> setups;
};

inline ReferenceData load_reference_data(const std::filesystem::path& dir = reference_dir()) {
  return {load_reference_values(dir / "reference_values.csv"),
          load_convergence_references(dir / "convergence_reference.csv"), load_table_setups(dir / "table_setups.csv")};
}

inline bool valid_table_id(int id) { return id >= 2 && id <= 11; }

/// Column compared against by default: the external reference for the
/// standard equation, the published collocation values elsewhere.
inline std::string default_table_source(int id) { return id <= 5 ? "Horedt" : "ICSRBF"; }

inline TableOptions table_options(int id) {
  TableOptions o;
  o.pointwise = (id >= 3 && id <= 5) || id >= 8;
  o.first_zero = id == 2;
  o.res_norm = id == 6;
  o.max_error = id == 7;
  o.source = default_table_source(id);
  return o;
}

/// Reproduces one table with the setups listed for it in `data`. Setups are
/// grouped per (problem, param) in file order.
inline std::vector<MetricsReport> run_table(int id, const ReferenceData& data, TableOptions options) {
  if (!valid_table_id(id)) throw InvalidParameter("unknown table id " + std::to_string(id) + " (expected 2..11)");
  std::vector<std::pair<std::pair<std::string, double>, std::vector<SetupParams>>> groups;
  for (const auto& ts : data.setups) {
    if (ts.table_id != id) continue;
    const auto key = std::make_pair(ts.problem, ts.param);
    if (groups.empty() || groups.back().first != key) groups.push_back({key, {}});
    groups.back().second.push_back(ts.setup);
  }
  if (groups.empty()) throw InvalidParameter("no setups listed for table " + std::to_string(id));

  std::vector<ReferenceValue> refs;
  for (const auto& r : data.values)
    if (r.table_id == id) refs.push_back(r);
  std::vector<ConvergenceReference> conv;
  for (const auto& c : data.convergence)
    if (c.table_id == id) conv.push_back(c);

  std::vector<MetricsReport> out;
  for (const auto& [key, setups] : groups) {
    const ProblemInstance problem = make_problem(key.first, key.second);
    auto part = build_table(problem, setups, refs, conv, options);
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<MetricsReport> run_table(int id, const ReferenceData& data) {
  return run_table(id, data, table_options(id));
}

}  // namespace icsrbf
