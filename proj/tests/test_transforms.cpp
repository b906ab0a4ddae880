#include <cmath>
#include <numbers>

#include "qcs/transforms.hpp"
#include "support.hpp"

using namespace qcs;

namespace {

AnalyticFunction ground() { return gaussian_ground_state(); }

}  // namespace

TEST_CASE("the ground state maps to 1") {
  const QDeformation qd = QDeformation::from_q(0.5);
  const QuadratureRule rule = make_quadrature_rule(qd, 12);
  const Complex z{0.4, -0.3};
  CHECK_NEAR(cst0(ground(), z, qd, rule), 1.0, 1e-13);
  CHECK_NEAR(cst(ground(), PhaseSpacePoint(z, 0, qd), rule), 1.0, 1e-13);
  CHECK_NEAR(bargmann_classical(ground(), z, rule), 1.0, 1e-13);
}

TEST_CASE("conj(phi_j) maps to Phi_j") {
  const QDeformation qd = QDeformation::from_q(0.5);
  const QuadratureRule rule = make_quadrature_rule(qd, 40, 2);
  const Complex z{0.25, 0.3};
  for (int m = 0; m <= 2; ++m) {
    const PhaseSpacePoint p(z, m, qd);
    const CstKernel k(p, rule);
    for (int j = 0; j <= 5; ++j) {
      const AnalyticFunction c([j, qd](Complex x) { return std::conj(rs_eigenfunction(j, std::conj(x), qd)); });
      CHECK_NEAR(k.apply(c), coeff_phi(j, m, z, qd.q()), 1e-10);
      CHECK_NEAR(cst_via_wavefunction(c, p, rule), coeff_phi(j, m, z, qd.q()), 1e-10);
    }
  }
}

TEST_CASE("coefficients of an eigenfunction") {
  const QDeformation qd = QDeformation::from_q(0.3);
  const QuadratureRule rule = make_quadrature_rule(qd, 10);
  std::vector<Complex> f = sample(rs_function(3, qd), rule);
  for (auto& v : f) v = std::conj(v);
  const auto c = rs_coefficients(f, rule, 10, qd);
  for (int j = 0; j <= 10; ++j) CHECK_NEAR(c[j], j == 3 ? 1.0 : 0.0, 1e-11);
  CHECK_THROWS_AS(rs_coefficients(std::vector<Complex>(3), rule, 2, qd), Error);
}

TEST_CASE("polyanalytic Bargmann transform") {
  const QuadratureRule rule = make_panel_rule(10.0, 0.5);
  const Complex z{0.3, 0.4};
  // Over m, the transforms of the Gaussian split as e^{...} z-bar powers;
  // at m = 0 both conventions reduce to the Bargmann transform.
  CHECK_NEAR(polyanalytic_bargmann(ground(), z, 0, rule), bargmann_classical(ground(), z, rule), 1e-14);
  CHECK_NEAR(polyanalytic_bargmann(ground(), z, 0, rule, HermiteShift::half),
             bargmann_classical(ground(), z, rule), 1e-14);
  CHECK_THROWS_AS(polyanalytic_bargmann(ground(), z, -1, rule), Error);
}

TEST_CASE("transform is outside the domain") {
  const QDeformation qd = QDeformation::from_q(0.5);
  const QuadratureRule rule = make_quadrature_rule(qd, 4);
  CHECK_THROWS_AS(cst0(ground(), {2.0, 0.0}, qd, rule), Error);
}
