#include <cmath>
#include <numbers>

#include "qcs/cstates.hpp"
#include "qcs/oscillator.hpp"
#include "support.hpp"

using namespace qcs;

TEST_CASE("coefficients against reference values") {
  const Complex z{0.3, 0.2};
  CHECK_NEAR(coeff_phi(2, 3, z, 0.5), Complex(1.1951539008130172, -0.79676926720867815), 1e-13);
  CHECK_NEAR(coeff_phi(7, 2, z, 0.5), Complex(-0.16185009978304691, 0.033074894763034711), 1e-13);
  CHECK_NEAR(coeff_phi(4, 4, {-0.5, 0.6}, 0.8), -0.83405182870243444, 1e-13);
}

TEST_CASE("m = 0 reduces to z^j / sqrt([j]_q!)") {
  const Complex z{0.7, -0.4};
  for (int j = 0; j <= 8; ++j) {
    CHECK_NEAR(coeff_phi(j, 0, z, 0.5), std::pow(z, j) / std::sqrt(qfactorial(j, 0.5)), 1e-13);
  }
}

TEST_CASE("q-Hermite form is the conjugate of the Wall form") {
  const Complex z{-0.4, 0.9};
  for (int m = 0; m <= 4; ++m) {
    for (int j = 0; j <= 6; ++j) {
      CHECK_NEAR(coeff_phi_hermite(j, m, z, 0.3), std::conj(coeff_phi(j, m, z, 0.3)), 1e-11);
    }
  }
}

TEST_CASE("lattice coefficients agree with the direct evaluation inside the domain") {
  const double q = 0.5;
  const int m = 2;
  for (int l = m + 1; l <= m + 4; ++l) {
    const double r = std::pow(q, 0.5 * l) / std::sqrt(1.0 - q);
    for (int j = 0; j <= 8; ++j) {
      CHECK_NEAR(coeff_phi_lattice(j, m, l, 0.7, q), coeff_phi(j, m, std::polar(r, 0.7), q), 1e-12);
    }
  }
}

TEST_CASE("normalization") {
  CHECK(normalization(2, 0.4, 0.5) == doctest::Approx(24.601534249810979).epsilon(1e-13));
  CHECK_THROWS_AS(normalization(1, 2.0, 0.5), Error);
  CHECK_THROWS_AS(PhaseSpacePoint({3.0, 0.0}, 1, QDeformation::from_q(0.5)), Error);
  CHECK(in_domain({0.5, 0.5}, 1, 0.5));
  CHECK_FALSE(in_domain({1.0, 0.0}, 1, 0.5));
}

TEST_CASE("wave function: closed form, series and reference values") {
  const QDeformation qd = QDeformation::from_q(0.5);
  const PhaseSpacePoint p2({0.3, 0.2}, 2, qd);
  const Complex want2{-0.13045157746602340, -0.70300318709446343};
  CHECK_NEAR(cs_wavefunction_closed(p2, 0.6), want2, 1e-12);
  CHECK_NEAR(cs_wavefunction_series(p2, 0.6).value, want2, 1e-12);
  const PhaseSpacePoint p0({0.3, 0.2}, 0, qd);
  const Complex want0{0.52241826085563832, -0.12212390465725900};
  CHECK_NEAR(cs_wavefunction_closed(p0, -0.4), want0, 1e-12);
  CHECK_NEAR(cs_wavefunction_m0({0.3, 0.2}, -0.4, qd), want0, 1e-12);
}

TEST_CASE("discrete measure") {
  const RadialMeasure meas = measure(QDeformation::from_q(0.5));
  double total = 0.0;
  for (double w : meas.weights) total += w;
  CHECK(total + meas.dropped_mass == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(meas.nodes[0] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("coefficients are orthonormal on the measure") {
  const double q = 0.5;
  const int m = 3;
  const RadialMeasure meas = measure(QDeformation::from_q(q));
  for (int j = 0; j <= 5; ++j) {
    for (int k = 0; k <= 5; ++k) {
      const Complex v = fock_inner([&](const MeasurePoint& p) { return coeff_phi_lattice(j, m, p.l, p.theta, q); },
                                   [&](const MeasurePoint& p) { return coeff_phi_lattice(k, m, p.l, p.theta, q); },
                                   meas, 8);
      CHECK_NEAR(v, j == k ? 1.0 : 0.0, 1e-10);
    }
  }
}
