#include "qcs/verify/suites.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "suites_internal.hpp"

namespace qcs::verify {

namespace {

using SuiteFn = SuiteReport (*)(const RunSettings&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"qidentities", suite_qidentities},
      {"wall-orthogonality", suite_wall_orthogonality},
      {"coeff-orthonormality", suite_coeff_orthonormality},
      {"rs-orthonormality", suite_rs_orthonormality},
      {"ladder", suite_ladder},
      {"hamiltonian", suite_hamiltonian},
      {"wavefunction-closed-vs-series", suite_wavefunction},
      {"kernel-three-forms", suite_kernel_three_forms},
      {"reproducing", suite_reproducing},
      {"limits-q1", suite_limits_q1},
      {"transform-isometry", suite_transform_isometry},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const std::string& n : suite_names()) {
    if (n == name) return true;
  }
  return false;
}

SuiteReport run_suite(const std::string& name, const RunSettings& settings) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport r = fn(settings);
    r.suite = name;
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return r;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& name, const RunSettings& settings) {
  if (name != "all") return {run_suite(name, settings)};
  std::vector<SuiteReport> out;
  for (const std::string& n : suite_names()) out.push_back(run_suite(n, settings));
  return out;
}

}  // namespace qcs::verify
