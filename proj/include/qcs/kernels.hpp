// Reproducing kernels of the spaces spanned by Phi_j^{q,m}.
#pragma once

#include "qcs/cstates.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

/// sum_j Phi_j(z) conj(Phi_j(w)), truncated by the measured geometric
/// bound |Phi_j(z) Phi_j(w)| <= C (rho_z rho_w)^j. Needs rho_z rho_w < 1.
SeriesValue kernel_qm_series(Complex z, Complex w, int m, double q, Truncation trunc = {});

/// Same sum with w a node of the radial measure; coefficients at w come
/// from coeff_phi_lattice, so w may lie on a circle outside C_{q,m}.
SeriesValue kernel_qm_series(Complex z, const MeasurePoint& w, int m, double q,
                             Truncation trunc = {});

/// (q^{1-m}(1-q)|z|^2;q)_m / (q^m (q^{-m}(1-q) z conj w;q)_inf)
///   * 3phi2(q^{-m}, z/w, q conj(z/w); q, q^{1-m}(1-q)|z|^2; q, q(1-q)|w|^2),
/// the 3phi2 summed as its m + 1 terms. Falls back to the series when
/// |w| < 1e-8 max(1, |z|).
Complex kernel_qm_closed(Complex z, Complex w, int m, double q);

/// (q^{1-m} a;q)_m (q w/z;q)_m / (q^m (q^{-m} l;q)_inf (q;q)_m)
///   * 3phi2(q^{-m}, q^{-m} l, z/w; q^{1-m} a, q^{-m} z/w; q, q),
/// a = (1-q)|z|^2, l = (1-q) z conj w. Needs z, w != 0 and z/w != q^{m-k}.
Complex kernel_qm_intermediate(Complex z, Complex w, int m, double q);

/// e_q(z conj w).
Complex arik_coon_kernel(Complex z, Complex w, double q);

/// e^{z conj w} L_m^{(0)}(|z - w|^2).
Complex kernel_classical(Complex z, Complex w, int m);

/// Closed form when both points lie in C_{q,m}, series otherwise.
Complex kernel_qm(Complex z, Complex w, int m, double q);

}  // namespace qcs
