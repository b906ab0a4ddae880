#include "qcs/kernels.hpp"
#include "support.hpp"

using namespace qcs;

TEST_CASE("kernels against reference values") {
  const Complex z{0.3, 0.2}, w{-0.1, 0.4};
  CHECK_NEAR(kernel_qm_closed(z, w, 2, 0.5), Complex(1.0618289585839407, -1.6869067367542686), 1e-12);
  CHECK_NEAR(kernel_qm_closed(z, w, 0, 0.5), Complex(1.0375549791151121, -0.14859016324584456), 1e-13);
}

TEST_CASE("three forms agree") {
  const double q = 0.5;
  const Complex z{0.15, -0.1}, w{-0.08, 0.2};
  for (int m = 0; m <= 4; ++m) {
    const Complex c = kernel_qm_closed(z, w, m, q);
    CHECK_NEAR(kernel_qm_series(z, w, m, q).value, c, 1e-11);
    CHECK_NEAR(kernel_qm_intermediate(z, w, m, q), c, 1e-11);
    CHECK_NEAR(kernel_qm_closed(w, z, m, q), std::conj(c), 1e-11);
  }
}

TEST_CASE("m = 0 is the Arik-Coon kernel") {
  const Complex z{0.6, 0.1}, w{0.2, -0.5};
  CHECK_NEAR(kernel_qm_closed(z, w, 0, 0.3), arik_coon_kernel(z, w, 0.3), 1e-13);
}

TEST_CASE("diagonal is the normalization") {
  const Complex z{0.4, 0.3};
  CHECK_NEAR(kernel_qm_closed(z, z, 3, 0.8), normalization(3, std::norm(z), 0.8), 1e-11);
}

TEST_CASE("classical kernel and small w") {
  CHECK_NEAR(kernel_classical({0.3, 0.1}, {0.3, 0.1}, 2), std::exp(0.1), 1e-15);
  CHECK_NEAR(kernel_qm_closed({0.3, 0.1}, 1e-12, 2, 0.5), kernel_qm_series({0.3, 0.1}, 1e-12, 2, 0.5).value,
             1e-13);
  CHECK_THROWS_AS(kernel_qm_intermediate(0.0, {0.1, 0.0}, 1, 0.5), Error);
}
