// Verification reports and their JSON form (schema_version 1).
//
//   { "schema_version": 1, "command": "verify", "suite": <requested>,
//     "seed": <u64>, "settings": {q_list, m_max, j_max, tol},
//     "suites": [ { "suite", "cases": [ {params, residual, tolerance, pass} ],
//                   "observations": [ {name, params, value, note} ],
//                   "summary": {passed, failed, wall_time_ms} } ],
//     "summary": {passed, failed, wall_time_ms} }
//
// Complex parameters are [re, im] pairs. wall_time_ms is 0 unless timing
// is requested, which keeps default output byte-stable.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcs::verify {

using Json = nlohmann::ordered_json;

struct Case {
  Json params;
  double residual = 0.0;
  double tolerance = 0.0;
  /// residual <= tolerance; false for NaN.
  bool pass = false;
};

Case make_case(Json params, double residual, double tolerance);

/// A measured quantity that does not gate the suite.
struct Observation {
  std::string name;
  Json params;
  double value = 0.0;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<Case> cases;
  std::vector<Observation> observations;
  std::int64_t wall_time_ms = 0;

  int passed() const;
  int failed() const;
};

struct RunSettings {
  std::vector<double> q_list{0.3, 0.5, 0.8};
  int m_max = 4;
  int j_max = 8;
  std::optional<double> tol;
  std::uint64_t seed = 7;
};

Json complex_json(std::complex<double> z);
Json to_json(const SuiteReport& r, bool timing);
Json to_json(const std::vector<SuiteReport>& suites, const std::string& requested,
             const RunSettings& settings, bool timing);

/// Two-space indented JSON with a trailing newline.
std::string render(const Json& j);

}  // namespace qcs::verify
