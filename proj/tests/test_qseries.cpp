#include <cmath>

#include "qcs/qseries.hpp"
#include "support.hpp"

using namespace qcs;

TEST_CASE("termination index") {
  CHECK(termination_index(std::pow(0.5, -4), 0.5) == 4);
  CHECK(termination_index(1.0, 0.5) == 0);
  CHECK_FALSE(termination_index({0.3, 0.1}, 0.5).has_value());
}

TEST_CASE("q-Gauss sum") {
  const double q = 0.5;
  const Complex a{0.3, 0.2}, b{-0.4, 0.1}, c{0.05, 0.02};
  const Complex z = c / (a * b);
  REQUIRE(std::abs(z) < 1.0);
  const Complex want = qpoch_inf(c / a, q) * qpoch_inf(c / b, q) / (qpoch_inf(c, q) * qpoch_inf(z, q));
  CHECK_NEAR(phi21(a, b, c, q, z).value, want, 1e-13);
}

TEST_CASE("q-Chu-Vandermonde") {
  const double q = 0.3;
  const Complex b{0.7, -0.4}, c{0.2, 0.5};
  for (int n = 0; n <= 8; ++n) {
    const Complex want = qpoch(c / b, q, n) / qpoch(c, q, n) * std::pow(b, n);
    CHECK_NEAR(phi21_terminating(n, b, c, q, q), want, 1e-12);
    CHECK_NEAR(phi21(std::pow(q, -n), b, c, q, q).value, want, 1e-12);
  }
}

TEST_CASE("q-binomial theorem through the general series") {
  const double q = 0.5;
  const Complex a{0.6, 0.3}, z{0.4, -0.2};
  const Complex up[] = {a};
  const SeriesValue v = basic_hypergeometric(up, {}, q, z);
  CHECK_NEAR(v.value, qpoch_inf(a * z, q) / qpoch_inf(z, q), 1e-14);
}

TEST_CASE("3phi2 terminating agrees with the general routine") {
  const double q = 0.8;
  const Complex a2{0.3, 0.1}, a3{-0.5, 0.2}, b1{0.4, -0.3}, b2{0.1, 0.6}, z{0.7, 0.2};
  for (int n = 0; n <= 6; ++n) {
    CHECK_NEAR(phi32_terminating(n, a2, a3, b1, b2, q, z),
               phi32(std::pow(q, -n), a2, a3, b1, b2, q, z).value, 1e-12);
  }
}

TEST_CASE("divergent series is reported") {
  CHECK_THROWS_AS(phi21({0.3, 0.0}, {0.2, 0.0}, {0.1, 0.0}, 0.5, {1.5, 0.0}), Error);
}
