// Polynomial families: Wall, Rogers-Szego, Stieltjes-Wigert,
// Al-Salam-Chihara, the two-index q-Hermite polynomials and their
// classical counterparts.
#pragma once

#include "qcs/qcore.hpp"

namespace qcs {

/// P_n(x;a|q) = 2phi1(q^{-n}, 0; aq; q, qx).
/// Throws ErrorKind::invalid_wall_parameter if aq = q^{-k} with k < n.
Complex wall(int n, Complex x, Complex a, double q);

/// P_n(x;a|q) via the reduced form
///   (x q^{1-n};q)_n / (aq;q)_n * 2phi1(q^{-n}, 0; x q^{1-n}; q, a q^{n+1}).
/// At x = 0 the series parameter degenerates to 0 and the value is 1.
Complex wall_reduced(int n, Complex x, Complex a, double q);

/// H_n(xi;q) = sum_k [n k]_q (q^{-1/2} xi)^k.
Complex rogers_szego(int n, Complex xi, double q);

/// s_n(x;q) = sum_k [n k]_q q^{k^2} x^k.
Complex stieltjes_wigert(int n, Complex x, double q);

/// s_n(x;1/q), built from Gaussian binomials in the base p = 1/q > 1.
Complex stieltjes_wigert_inverse_base(int n, Complex x, double q);

/// Q_m(x;alpha,beta|q), x = (u + 1/u)/2, from the expansion of its
/// generating function. No division by alpha, so alpha = 0 is regular.
Complex al_salam_chihara(int m, Complex u, Complex alpha, Complex beta, double q);

/// Q_m from (alpha beta;q)_m alpha^{-m} 3phi2(q^{-m}, alpha u, alpha/u; alpha beta, 0; q, q).
/// Needs alpha != 0.
Complex al_salam_chihara_hypergeometric(int m, Complex u, Complex alpha, Complex beta,
                                        double q);

/// H_{m,j}(z,zeta|q) = sum_k [m k]_q [j k]_q (-1)^k q^{k(k-1)/2} (q;q)_k z^{m-k} zeta^{j-k}.
Complex qhermite2d(int m, int j, Complex z, Complex zeta, double q);

/// Physicists' Hermite polynomial H_n.
Complex hermite(int n, Complex x);

/// L_m^{(0)}(x) = sum_k (-1)^k C(m,k) x^k / k!.
Complex laguerre0(int m, Complex x);

/// H_{m,j}(z,zeta) = sum_k (-1)^k k! C(m,k) C(j,k) z^{m-k} zeta^{j-k}.
Complex complex_hermite(int m, int j, Complex z, Complex zeta);

}  // namespace qcs
