#pragma once

#include <complex>

#include "doctest.h"

namespace qcs::test {

/// |a - b| <= tol max(1, |b|).
inline bool near(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace qcs::test

#define CHECK_NEAR(a, b, tol)                                              \
  do {                                                                     \
    const std::complex<double> _a = (a), _b = (b);                         \
    INFO("got " << _a << ", want " << _b);                                 \
    CHECK(qcs::test::near(_a, _b, (tol)));                                 \
  } while (0)
