#include "qcs/verify/report.hpp"

#include <algorithm>
#include <cmath>

namespace qcs::verify {

Case make_case(Json params, double residual, double tolerance) {
  Case c;
  c.params = std::move(params);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const Case& c) { return c.pass; }));
}

int SuiteReport::failed() const { return static_cast<int>(cases.size()) - passed(); }

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const SuiteReport& r, bool timing) {
  Json cases = Json::array();
  for (const Case& c : r.cases) {
    Json j;
    j["params"] = c.params;
    j["residual"] = c.residual;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    cases.push_back(std::move(j));
  }
  Json obs = Json::array();
  for (const Observation& o : r.observations) {
    Json j;
    j["name"] = o.name;
    j["params"] = o.params;
    j["value"] = o.value;
    j["note"] = o.note;
    obs.push_back(std::move(j));
  }
  Json out;
  out["suite"] = r.suite;
  out["cases"] = std::move(cases);
  out["observations"] = std::move(obs);
  out["summary"] = {{"passed", r.passed()},
                    {"failed", r.failed()},
                    {"wall_time_ms", timing ? r.wall_time_ms : 0}};
  return out;
}

Json to_json(const std::vector<SuiteReport>& suites, const std::string& requested,
             const RunSettings& settings, bool timing) {
  Json out;
  out["schema_version"] = 1;
  out["command"] = "verify";
  out["suite"] = requested;
  out["seed"] = settings.seed;
  Json s;
  s["q_list"] = settings.q_list;
  s["m_max"] = settings.m_max;
  s["j_max"] = settings.j_max;
  s["tol"] = settings.tol ? Json(*settings.tol) : Json(nullptr);
  out["settings"] = std::move(s);
  Json arr = Json::array();
  int passed = 0;
  int failed = 0;
  std::int64_t ms = 0;
  for (const SuiteReport& r : suites) {
    arr.push_back(to_json(r, timing));
    passed += r.passed();
    failed += r.failed();
    ms += r.wall_time_ms;
  }
  out["suites"] = std::move(arr);
  out["summary"] = {{"passed", passed}, {"failed", failed}, {"wall_time_ms", timing ? ms : 0}};
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcs::verify
