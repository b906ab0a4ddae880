#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "qcs/qcore.hpp"
#include "qcs/verify/parallel.hpp"
#include "qcs/verify/prng.hpp"
#include "qcs/verify/report.hpp"

namespace qcs::verify {

struct Chunk {
  std::vector<Case> cases;
  std::vector<Observation> observations;
};

using Job = std::function<Chunk()>;

inline SuiteReport assemble(const std::string& name, const std::vector<Job>& jobs) {
  const auto chunks = parallel_map<Chunk>(jobs.size(), [&](std::size_t i) { return jobs[i](); });
  SuiteReport r;
  r.suite = name;
  for (const Chunk& c : chunks) {
    r.cases.insert(r.cases.end(), c.cases.begin(), c.cases.end());
    r.observations.insert(r.observations.end(), c.observations.begin(), c.observations.end());
  }
  return r;
}

inline double tol_or(const RunSettings& s, double fallback) { return s.tol.value_or(fallback); }

/// |a - b| / max(1, |a|).
inline double rel_residual(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::abs(a));
}

/// Running maximum that keeps the parameters of the worst draw.
struct Worst {
  double value = 0.0;
  Json params = Json::object();
  void update(double v, const Json& p) {
    if (std::isnan(value)) return;
    if (params.empty() || std::isnan(v) || v > value) {
      value = v;
      params = p;
    }
  }
};

SuiteReport suite_qidentities(const RunSettings& s);
SuiteReport suite_wall_orthogonality(const RunSettings& s);
SuiteReport suite_coeff_orthonormality(const RunSettings& s);
SuiteReport suite_rs_orthonormality(const RunSettings& s);
SuiteReport suite_ladder(const RunSettings& s);
SuiteReport suite_hamiltonian(const RunSettings& s);
SuiteReport suite_wavefunction(const RunSettings& s);
SuiteReport suite_kernel_three_forms(const RunSettings& s);
SuiteReport suite_reproducing(const RunSettings& s);
SuiteReport suite_limits_q1(const RunSettings& s);
SuiteReport suite_transform_isometry(const RunSettings& s);

}  // namespace qcs::verify
