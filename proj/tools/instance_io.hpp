#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tensolve/tensolve.hpp"

// Instance / report file schema for the CLI. One self-describing JSON format,
// versioned through the "format" field. Parsing is strict: unknown keys are
// rejected with a diagnostic naming the offender.

namespace tensolve::io {

using nlohmann::json;

inline constexpr const char* kInstanceFormat = "tensolve-instance/1";
inline constexpr const char* kReportFormat = "tensolve-report/1";

inline constexpr std::array<const char*, 30> kParamKeys = {
    "a1",  "a2",  "a3",  "a4",  "a5",  "a6",  "a71", "a72", "a73", "a81",
    "a82", "a83", "a91", "a92", "a93", "b11", "b12", "b13", "b21", "b22",
    "b23", "b31", "b32", "b33", "b1",  "b2",  "b3",  "c1",  "c2",  "c3"};

struct ParsedInstance {
  ParameterSet params;
  Metric metric = Metric::euclidean();
  Rank3 b;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

inline Metric parse_metric(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "euclidean") return Metric::euclidean();
    if (s == "minkowski") return Metric::minkowski();
    fail("metric: unknown shorthand \"" + s +
         "\" (expected \"euclidean\" or \"minkowski\")");
  }
  if (!j.is_array() || j.size() != 4) fail("metric: expected 4x4 array");
  std::array<double, 16> g{};
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4)
      fail("metric: row " + std::to_string(i) + " is not a 4-array");
    for (int k = 0; k < 4; ++k) {
      if (!j[i][k].is_number())
        fail("metric: entry (" + std::to_string(i) + "," + std::to_string(k) +
             ") is not a number");
      g[4 * i + k] = j[i][k].get<double>();
    }
  }
  try {
    return Metric(g);
  } catch (const std::invalid_argument& e) {
    fail(std::string("metric: ") + e.what());
  }
}

inline ParameterSet parse_params(const json& j) {
  if (!j.is_object()) fail("parameters: expected an object of named values");
  std::array<double, 30> flat{};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::size_t i = 0; i < kParamKeys.size(); ++i) {
      if (key == kParamKeys[i]) {
        if (!value.is_number())
          fail("parameters: \"" + key + "\" is not a number");
        flat[i] = value.get<double>();
        known = true;
        break;
      }
    }
    if (!known) fail("parameters: unknown key \"" + key + "\"");
  }
  return ParameterSet::from_flat(flat);
}

inline Rank3 parse_b(const json& j) {
  Rank3 b;
  if (j.is_array() && j.size() == 64) {
    for (int i = 0; i < 64; ++i) {
      if (!j[i].is_number()) fail("B: entry " + std::to_string(i) + " is not a number");
      b.c[i] = j[i].get<double>();
    }
    return b;
  }
  if (j.is_array() && j.size() == 4) {
    for (int a = 0; a < 4; ++a) {
      if (!j[a].is_array() || j[a].size() != 4) fail("B: expected 4x4x4 nesting");
      for (int m = 0; m < 4; ++m) {
        if (!j[a][m].is_array() || j[a][m].size() != 4)
          fail("B: expected 4x4x4 nesting");
        for (int n = 0; n < 4; ++n) {
          if (!j[a][m][n].is_number()) fail("B: non-numeric component");
          b(a, m, n) = j[a][m][n].get<double>();
        }
      }
    }
    return b;
  }
  fail("B: expected a flat 64-array or a nested 4x4x4 array");
}

/// FNV-1a 64-bit, hex-encoded.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

inline ParsedInstance parse_instance(const json& j) {
  if (!j.is_object()) detail::fail("instance: top level must be an object");
  ParsedInstance inst;
  bool have_metric = false, have_b = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "format") {
      if (!value.is_string() || value.get<std::string>() != kInstanceFormat)
        detail::fail("format: expected \"" + std::string(kInstanceFormat) +
                     "\"");
    } else if (key == "metric") {
      inst.metric = detail::parse_metric(value);
      have_metric = true;
    } else if (key == "parameters") {
      inst.params = detail::parse_params(value);
    } else if (key == "B") {
      inst.b = detail::parse_b(value);
      have_b = true;
    } else {
      detail::fail("instance: unknown key \"" + key + "\"");
    }
  }
  if (!have_metric) detail::fail("instance: missing \"metric\"");
  if (!have_b) detail::fail("instance: missing \"B\"");
  return inst;
}

inline ParsedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    detail::fail("malformed JSON in " + path + ": " + e.what());
  }
  return parse_instance(j);
}

/// Canonical serialization: shorthand-free metric, all 30 parameters named,
/// flat B. The digest of this form identifies the instance.
inline json instance_to_json(const ParsedInstance& inst) {
  json j;
  j["format"] = kInstanceFormat;
  json m = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(inst.metric(i, k));
    m.push_back(row);
  }
  j["metric"] = m;
  json p;
  const auto flat = inst.params.flat();
  for (std::size_t i = 0; i < kParamKeys.size(); ++i) p[kParamKeys[i]] = flat[i];
  j["parameters"] = p;
  j["B"] = inst.b.c;
  return j;
}

inline std::string instance_digest(const ParsedInstance& inst) {
  return detail::fnv1a_hex(instance_to_json(inst).dump());
}

inline json report_to_json(const ParsedInstance& inst, const SolveReport& rep,
                           bool verbose = false) {
  json j;
  j["format"] = kReportFormat;
  j["tool_version"] = kVersion;
  j["input_digest"] = instance_digest(inst);
  j["status"] = to_string(rep.status);
  j["det_gamma"] = rep.det_gamma;
  j["det_a"] = rep.det_a;
  j["rcond_gamma"] = rep.rcond_gamma;
  j["rcond_a"] = rep.rcond_a;
  j["residual_rel"] = rep.residual_rel;
  j["timings_us"] = {{"traces", rep.timings.traces_us},
                     {"gamma", rep.timings.gamma_us},
                     {"rhs", rep.timings.rhs_us},
                     {"a_matrix", rep.timings.a_matrix_us},
                     {"extract", rep.timings.extract_us},
                     {"residual", rep.timings.residual_us}};
  j["N"] = rep.n_solution.c;
  json nested = json::array();
  for (int a = 0; a < 4; ++a) {
    json plane = json::array();
    for (int m = 0; m < 4; ++m) {
      json row = json::array();
      for (int n = 0; n < 4; ++n) row.push_back(rep.n_solution(a, m, n));
      plane.push_back(row);
    }
    nested.push_back(plane);
  }
  j["N_nested"] = nested;
  if (verbose) {
    const TraceSystem ts = TraceSystem::build(inst.params,
                                              inst.metric.sign_factor());
    const PermSystem ps = PermSystem::build(inst.params,
                                            inst.metric.sign_factor());
    j["gamma"] = ts.gamma;
    j["a_matrix"] = ps.a_mat;
    j["a_inv_first_row"] = ps.first_row_inv;
  }
  return j;
}

struct ParsedReport {
  std::string status;
  Rank3 n;
  double det_gamma = 0, det_a = 0, residual_rel = 0;
};

inline ParsedReport load_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail("cannot open report file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    detail::fail("malformed JSON in " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("format") ||
      j["format"] != kReportFormat)
    detail::fail("report: missing or unexpected format field");
  ParsedReport r;
  r.status = j.at("status").get<std::string>();
  const auto& n = j.at("N");
  if (!n.is_array() || n.size() != 64) detail::fail("report: N must be a 64-array");
  for (int i = 0; i < 64; ++i) r.n.c[i] = n[i].get<double>();
  r.det_gamma = j.at("det_gamma").get<double>();
  r.det_a = j.at("det_a").get<double>();
  r.residual_rel = j.at("residual_rel").get<double>();
  return r;
}

inline void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) detail::fail("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace tensolve::io
