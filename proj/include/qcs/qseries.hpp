// Basic hypergeometric series 2phi1 and 3phi2.
//
//   r phi s (a_1..a_r; b_1..b_s; q, z) = sum_k prod (a_i;q)_k / prod (b_j;q)_k
//                                         * z^k / (q;q)_k,   r = s + 1.
//
// A numerator parameter equal to q^{-n} (to relative 1e-10, n <= 10^4)
// makes the series terminate after n + 1 terms. Terminating sums are
// accumulated in binary128 because the q^{-n} factors grow like q^{-nk}
// and cancel heavily; convergent sums (|z| < 1) run in double with a
// geometric tail bound.
#pragma once

#include <optional>
#include <span>

#include "qcs/qcore.hpp"

namespace qcs {

/// Index n with p == q^{-n} to relative tolerance 1e-10, if any.
std::optional<int> termination_index(Complex p, double q);

/// General r phi r-1 with r = upper.size() = lower.size() + 1.
SeriesValue basic_hypergeometric(std::span<const Complex> upper,
                                 std::span<const Complex> lower, double q, Complex z,
                                 Truncation trunc = {});

SeriesValue phi21(Complex a, Complex b, Complex c, double q, Complex z,
                  Truncation trunc = {});

SeriesValue phi32(Complex a1, Complex a2, Complex a3, Complex b1, Complex b2, double q,
                  Complex z, Truncation trunc = {});

/// 2phi1(q^{-n}, b; c; q, z) summed as exactly n + 1 terms.
Complex phi21_terminating(int n, Complex b, Complex c, double q, Complex z);

/// 3phi2(q^{-n}, a2, a3; b1, b2; q, z) summed as exactly n + 1 terms.
Complex phi32_terminating(int n, Complex a2, Complex a3, Complex b1, Complex b2, double q,
                          Complex z);

}  // namespace qcs
