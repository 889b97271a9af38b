#pragma once

// Machine-readable verification reports.
//
// A report is a single JSON document with a fixed, versioned schema:
//
//   {
//     "schema_version": 1,
//     "suite":        "<suite name>",
//     "version":      "<toolkit version>",
//     "seed":         <unsigned>,
//     "config":       { "samples": N, "tol": {...}, "cap": {...} },
//     "cases":        [ { "index", "input", "residual", "tolerance",
//                         "pass", "time_ms" }, ... ],
//     "max_residual": <real>,
//     "pass":         <bool>
//   }
//
// Determinism contract: for a fixed (suite, seed, config, version) the
// emitted bytes are identical across runs.  Three ingredients make that
// hold: object keys are serialized in sorted order, doubles use the
// shortest round-trip representation, and per-case wall time is recorded
// as 0 unless timing capture is explicitly enabled (wall time is the one
// inherently nondeterministic field).
//
// Parsing is strict: unknown fields anywhere in the document, a missing
// field, a wrong type, or an unsupported schema_version are all rejected
// with std::invalid_argument.  That keeps downstream tooling honest --
// nobody can smuggle data past the schema.
//
// A case that throws an expected domain error is recorded as a failure
// with the reason appended to its input digest and the residual set to
// the sentinel 9e99 (JSON cannot carry infinities).

#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gl3verify/version.hpp"

namespace gl3verify {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr double kErrorResidualSentinel = 9e99;

struct CaseResult {
  std::int64_t index = 0;
  std::string input;        // reproducible digest of the case inputs
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double time_ms = 0.0;     // 0 unless timing capture was enabled
};

struct SuiteEffectiveConfig {
  std::int64_t samples = 0;
  std::map<std::string, double> tol;        // effective tolerances, by name
  std::map<std::string, std::int64_t> cap;  // effective caps, by name
};

struct VerificationReport {
  int schema_version = kReportSchemaVersion;
  std::string suite;
  std::string version = kVersion;
  std::uint64_t seed = 0;
  SuiteEffectiveConfig config;
  std::vector<CaseResult> cases;
  double max_residual = 0.0;
  bool pass = true;
};

namespace report_detail {

inline void require_keys(const nlohmann::json& obj,
                         std::initializer_list<const char*> allowed,
                         const char* where) {
  if (!obj.is_object())
    throw std::invalid_argument(std::string("report parse: ") + where +
                                " is not an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known)
      throw std::invalid_argument(std::string("report parse: unknown field '") +
                                  item.key() + "' in " + where);
  }
  for (const char* k : allowed)
    if (!obj.contains(k))
      throw std::invalid_argument(std::string("report parse: missing field '") +
                                  k + "' in " + where);
}

template <typename T>
T field_as(const nlohmann::json& obj, const char* key, const char* where) {
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("report parse: field '") + key +
                                "' in " + where + " has the wrong type");
  }
}

}  // namespace report_detail

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json cfg;
  cfg["samples"] = r.config.samples;
  cfg["tol"] = nlohmann::json::object();
  for (const auto& [k, v] : r.config.tol) cfg["tol"][k] = v;
  cfg["cap"] = nlohmann::json::object();
  for (const auto& [k, v] : r.config.cap) cfg["cap"][k] = v;

  nlohmann::json cases = nlohmann::json::array();
  for (const CaseResult& c : r.cases) {
    nlohmann::json jc;
    jc["index"] = c.index;
    jc["input"] = c.input;
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    jc["time_ms"] = c.time_ms;
    cases.push_back(std::move(jc));
  }

  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["suite"] = r.suite;
  j["version"] = r.version;
  j["seed"] = r.seed;
  j["config"] = std::move(cfg);
  j["cases"] = std::move(cases);
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass;
  return j;
}

inline std::string report_to_string(const VerificationReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

inline VerificationReport parse_report(const std::string& text) {
  using report_detail::field_as;
  using report_detail::require_keys;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report parse: not valid JSON: ") +
                                e.what());
  }
  require_keys(j,
               {"schema_version", "suite", "version", "seed", "config",
                "cases", "max_residual", "pass"},
               "report");
  VerificationReport r;
  r.schema_version = field_as<int>(j, "schema_version", "report");
  if (r.schema_version != kReportSchemaVersion)
    throw std::invalid_argument("report parse: unsupported schema_version");
  r.suite = field_as<std::string>(j, "suite", "report");
  r.version = field_as<std::string>(j, "version", "report");
  r.seed = field_as<std::uint64_t>(j, "seed", "report");

  const nlohmann::json& cfg = j.at("config");
  require_keys(cfg, {"samples", "tol", "cap"}, "config");
  r.config.samples = field_as<std::int64_t>(cfg, "samples", "config");
  if (!cfg.at("tol").is_object() || !cfg.at("cap").is_object())
    throw std::invalid_argument("report parse: config.tol/config.cap must be objects");
  for (const auto& item : cfg.at("tol").items()) {
    if (!item.value().is_number())
      throw std::invalid_argument("report parse: config.tol values must be numbers");
    r.config.tol[item.key()] = item.value().get<double>();
  }
  for (const auto& item : cfg.at("cap").items()) {
    if (!item.value().is_number_integer())
      throw std::invalid_argument("report parse: config.cap values must be integers");
    r.config.cap[item.key()] = item.value().get<std::int64_t>();
  }

  if (!j.at("cases").is_array())
    throw std::invalid_argument("report parse: cases must be an array");
  for (const nlohmann::json& jc : j.at("cases")) {
    require_keys(jc, {"index", "input", "residual", "tolerance", "pass", "time_ms"},
                 "case");
    CaseResult c;
    c.index = field_as<std::int64_t>(jc, "index", "case");
    c.input = field_as<std::string>(jc, "input", "case");
    c.residual = field_as<double>(jc, "residual", "case");
    c.tolerance = field_as<double>(jc, "tolerance", "case");
    c.pass = field_as<bool>(jc, "pass", "case");
    c.time_ms = field_as<double>(jc, "time_ms", "case");
    r.cases.push_back(std::move(c));
  }
  r.max_residual = field_as<double>(j, "max_residual", "report");
  r.pass = field_as<bool>(j, "pass", "report");

  // Enforce the aggregate invariant on parse as well: aggregate pass is
  // not free-standing data, it must equal the conjunction of the cases.
  bool all = true;
  for (const CaseResult& c : r.cases) all = all && c.pass;
  if (r.pass != all)
    throw std::invalid_argument(
        "report parse: aggregate pass flag contradicts the case list");
  return r;
}

inline void emit_report(const VerificationReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_report: cannot open " + path);
  out << report_to_string(r);
  if (!out) throw std::runtime_error("emit_report: write failed for " + path);
}

}  // namespace gl3verify
