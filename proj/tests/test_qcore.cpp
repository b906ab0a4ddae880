#include <cmath>
#include <numbers>

#include "qcs/qcore.hpp"
#include "support.hpp"

using namespace qcs;

// Reference values computed independently to 30 digits.
TEST_CASE("q-Pochhammer symbols against reference values") {
  CHECK_NEAR(qpoch({0.4, 0.3}, 0.5, 5), Complex(0.32152095703125, -0.325025419921875), 1e-15);
  CHECK_NEAR(qpoch_inf({0.4, 0.3}, 0.5), Complex(0.30751930429550423, -0.32285805402754384), 1e-15);
  CHECK_NEAR(qpoch_inf(0.3, 0.3), 0.61264815421325652, 1e-15);
  CHECK(qpoch(0.7, 0.5, 0) == Complex(1.0, 0.0));
}

TEST_CASE("negative order inverts and detects poles") {
  const double q = 0.5;
  const Complex a{0.3, 0.1};
  CHECK_NEAR(qpochhammer(a, q, -3).value, 1.0 / qpoch(a * std::pow(q, -3), q, 3), 1e-14);
  CHECK_THROWS_AS(qpochhammer(std::pow(q, 2), q, -3), Error);
}

TEST_CASE("multi-argument symbol is the product") {
  const Complex a[] = {{0.2, 0.1}, {-0.4, 0.3}};
  CHECK_NEAR(qpochhammer(a, 0.5, 4).value, qpoch(a[0], 0.5, 4) * qpoch(a[1], 0.5, 4), 1e-15);
}

TEST_CASE("q-numbers, factorials and binomials") {
  CHECK(qnumber(3, 0.5) == doctest::Approx(1.75));
  CHECK(qnumber(0, 0.5) == 0.0);
  CHECK(qfactorial(5, 0.5) == doctest::Approx(9.5361328125).epsilon(1e-15));
  CHECK(qbinomial(7, 3, 0.3) == doctest::Approx(1.607975401711).epsilon(1e-14));
  CHECK(qbinomial(6, 0, 0.8) == 1.0);
  CHECK(qcoeff_recip(-1, 0.5) == 0.0);
}

TEST_CASE("q-exponential") {
  CHECK_NEAR(qexp(0.0, 0.5).value, 1.0, 0.0);
  CHECK_NEAR(qexp({0.5, 0.2}, 0.5).value, Complex(1.6627602365291966, 0.4101265301691765), 1e-14);
  const SeriesValue v = qexp(1.2, 0.8);
  CHECK_NEAR(v.value, 3.6369226958535797, 1e-14);
  CHECK(v.abs_error_estimate < 1e-12);
}

TEST_CASE("log-space product survives near q = 1") {
  const double q = 0.999;
  const double lg = log_qpochhammer_inf(q, q);
  CHECK(std::isfinite(lg));
  // q = e^{-t}: log (q;q)_inf = -pi^2/(6t) + log(2 pi/t)/2 + t/24 up to e^{-4 pi^2/t}.
  const double t = -std::log(q);
  const double pi = std::numbers::pi;
  CHECK(lg == doctest::Approx(-pi * pi / (6.0 * t) + 0.5 * std::log(2.0 * pi / t) + t / 24.0).epsilon(1e-12));
}

TEST_CASE("deformation parameter") {
  const QDeformation qd = QDeformation::from_q(0.5);
  CHECK(std::exp(-2.0 * qd.kappa() * qd.kappa()) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(QDeformation::from_kappa(qd.kappa()).q() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(QDeformation::from_q(1.0), Error);
  CHECK_THROWS_AS(QDeformation::from_q(0.0), Error);
}

TEST_CASE("helpers") {
  CHECK(one_minus_qpow(0.5, 1e-12) == doctest::Approx(1e-12 * std::log(2.0)).epsilon(1e-10));
  CHECK_NEAR(ipow({0.3, 0.4}, 5), std::pow(Complex(0.3, 0.4), 5), 1e-15);
  CHECK_NEAR(ipow({0.0, 0.0}, 0), 1.0, 0.0);
  CHECK_NEAR(ipow({0.0, 2.0}, -2), -0.25, 1e-16);
}
