#include <cmath>

#include "qcs/qpoly.hpp"
#include "support.hpp"

using namespace qcs;

TEST_CASE("polynomial families against reference values") {
  CHECK_NEAR(wall(4, {0.7, -0.2}, 0.3, 0.5), Complex(-1.6631305364913458, 2.2328698611950766), 1e-13);
  CHECK_NEAR(wall(6, 1.3, 0.64, 0.8), 39.471147169110459, 1e-13);
  CHECK_NEAR(rogers_szego(5, {-0.6, 0.8}, 0.5), Complex(-1.6943667015682012, -1.5208973637294178), 1e-14);
  CHECK_NEAR(stieltjes_wigert(4, {0.9, -0.3}, 0.3), Complex(1.3914396191104456, -0.13417663009663502), 1e-14);
  CHECK_NEAR(al_salam_chihara(3, {0.7, 0.4}, {0.3, -0.2}, {0.5, 0.1}, 0.5),
             Complex(0.69556622667273555, -0.68042182521620391), 1e-13);
  CHECK_NEAR(qhermite2d(3, 2, {0.3, 0.2}, {-0.1, 0.4}, 0.8), Complex(0.0937484, 0.0149016), 1e-14);
  CHECK_NEAR(hermite(5, {0.7, -0.3}), Complex(55.76704, 22.87104), 1e-14);
  CHECK_NEAR(laguerre0(4, {1.5, 0.5}), Complex(-0.42708333333333333, 0.58333333333333333), 1e-14);
  CHECK_NEAR(complex_hermite(3, 4, {0.3, 0.2}, {-0.1, 0.4}), Complex(1.2516711, -11.5799554), 1e-14);
}

TEST_CASE("Wall polynomial forms agree") {
  const double q = 0.5;
  for (int n = 0; n <= 8; ++n) {
    CHECK_NEAR(wall_reduced(n, {0.8, 0.3}, {0.4, -0.2}, q), wall(n, {0.8, 0.3}, {0.4, -0.2}, q), 1e-11);
  }
  CHECK_NEAR(wall_reduced(5, 0.0, 0.3, q), 1.0, 1e-15);
  CHECK_THROWS_AS(wall(3, 0.5, 1.0 / (q * q), q), Error);
}

TEST_CASE("Al-Salam-Chihara: both routes, symmetry, alpha = 0") {
  const double q = 0.3;
  const Complex u{0.9, 0.5}, alpha{0.4, 0.2}, beta{-0.3, 0.6};
  for (int m = 0; m <= 6; ++m) {
    CHECK_NEAR(al_salam_chihara(m, u, alpha, beta, q),
               al_salam_chihara_hypergeometric(m, u, alpha, beta, q), 1e-11);
    CHECK_NEAR(al_salam_chihara(m, u, alpha, beta, q), al_salam_chihara(m, 1.0 / u, alpha, beta, q),
               1e-12);
  }
  CHECK(al_salam_chihara(0, u, alpha, beta, q) == Complex(1.0, 0.0));
  // alpha = 0: the generating function gives Q_1 = 2x - beta.
  const Complex x = 0.5 * (u + 1.0 / u);
  CHECK_NEAR(al_salam_chihara(1, u, 0.0, beta, q), 2.0 * x - beta, 1e-14);
  CHECK_NEAR(al_salam_chihara(3, u, 1e-9, beta, q), al_salam_chihara(3, u, 0.0, beta, q), 1e-8);
}

TEST_CASE("two-index q-Hermite polynomials") {
  const double q = 0.5;
  const Complex z{0.3, -0.7}, w{1.1, 0.2};
  for (int j = 0; j <= 5; ++j) CHECK_NEAR(qhermite2d(0, j, z, w, q), std::pow(w, j), 1e-14);
  for (int r = 0; r <= 4; ++r) {
    for (int s = 0; s <= 4; ++s) CHECK_NEAR(qhermite2d(r, s, z, w, q), qhermite2d(s, r, w, z, q), 1e-12);
  }
}

TEST_CASE("classical families") {
  CHECK_NEAR(hermite(0, 2.0), 1.0, 0.0);
  CHECK_NEAR(hermite(3, 0.5), 8.0 * 0.125 - 12.0 * 0.5, 1e-15);
  CHECK_NEAR(laguerre0(2, 1.0), 1.0 - 2.0 + 0.5, 1e-15);
  // H_{1,1}(z, w) = z w - 1.
  CHECK_NEAR(complex_hermite(1, 1, {0.3, 0.2}, {0.5, -0.1}), Complex(0.3, 0.2) * Complex(0.5, -0.1) - 1.0,
             1e-15);
}
