// Generalized q-coherent states: the coefficients Phi_j^{q,m}, the
// normalization N_{q,m}, the wave function Psi_z^{q,m} and the discrete
// radial measure d mu_q on which the coefficients are orthonormal.
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qcs/qcore.hpp"

namespace qcs {

/// (1 - q)|z|^2 < q^m.
bool in_domain(Complex z, int m, double q);

struct PhaseSpacePoint {
  Complex z;
  int m;
  QDeformation qd;

  /// Throws ErrorKind::outside_domain when z is outside C_{q,m}.
  PhaseSpacePoint(Complex z_, int m_, QDeformation qd_);
};

/// Phi_j^{q,m}(z). For j > m the q^{-mj/2} growth is folded into the
/// power of |z| so large j does not overflow.
Complex coeff_phi(int j, int m, Complex z, double q);
inline Complex coeff_phi(int j, const PhaseSpacePoint& p) { return coeff_phi(j, p.m, p.z, p.qd.q()); }

/// Phi_j^{q,m}(r_l e^{i theta}) with r_l^2 = q^l/(1-q), evaluated in
/// binary128 with the Wall argument q^l exact. Off the domain (l <= m) the
/// Wall factor is tiny and the power of |z| is large, so rounding in the
/// argument would otherwise dominate.
Complex coeff_phi_lattice(int j, int m, int l, double theta, double q);

/// H_{m,j}(sqrt(1-q) z, sqrt(1-q) conj z |q) / sqrt(q^{mj} (q;q)_j (q;q)_m).
Complex coeff_phi_hermite(int j, int m, Complex z, double q);

/// N_{q,m}(x) = q^{-m} (q^{1-m}(1-q)x;q)_m / (q^{-m}(1-q)x;q)_inf.
/// Throws ErrorKind::outside_domain unless 0 <= (1-q)x < q^m.
double normalization(int m, double x, double q);

enum class CoefficientConvention {
  /// N^{-1/2} sum_j Phi_j(z) phi_j; agrees with the closed form.
  plain,
  /// N^{-1/2} sum_j conj(Phi_j(z)) phi_j.
  conjugate,
};

/// Truncated superposition of the eigenfunctions. The tail bound uses
/// |Phi_j(z)| <= C rho^j with C measured on the computed terms and
/// rho = sqrt((1-q)|z|^2/q^m), together with the uniform bound
/// |phi_j(xi)| <= pi^{-1/4} e^{-xi^2/2} / ((q;q)_inf^{3/2} (1 - sqrt q)).
SeriesValue cs_wavefunction_series(const PhaseSpacePoint& p, double xi,
                                   CoefficientConvention conv = CoefficientConvention::plain,
                                   Truncation trunc = {});

/// Closed form in terms of Al-Salam-Chihara polynomials with
/// u = i q^{1/4} e^{-i kappa xi}.
Complex cs_wavefunction_closed(const PhaseSpacePoint& p, double xi);

/// The m = 0 closed form
///   e_q(|z|^2)^{-1/2} pi^{-1/4} e^{-xi^2/2}
///     / ((-i z sqrt(1-q) e^{2 i kappa xi};q)_inf (i z sqrt(q(1-q));q)_inf).
Complex cs_wavefunction_m0(Complex z, double xi, const QDeformation& qd);

/// Nodes r_l = q^{l/2}/sqrt(1-q) and weights w_l = q^l (q;q)_inf/(q;q)_l,
/// l < count, with dropped mass below tail_tol.
struct RadialMeasure {
  double q = 0.5;
  std::vector<double> nodes;
  std::vector<double> weights;
  int count = 0;
  /// Rigorous bound on sum_{l >= count} w_l.
  double dropped_mass = 0.0;
};

RadialMeasure measure(const QDeformation& qd, double tail_tol = 1e-14);

/// A quadrature point of d mu_q: z = r_l e^{i theta}.
struct MeasurePoint {
  Complex z;
  int l;
  double theta;
};

/// The measure with a trapezoidal rule of angular_points(l) points on
/// circle l; weight = w_l / angular_points(l).
struct FockGrid {
  std::vector<MeasurePoint> points;
  std::vector<double> weights;
};

FockGrid make_fock_grid(const RadialMeasure& meas, int n_max);
FockGrid make_fock_grid(const RadialMeasure& meas, const std::function<int(int)>& angular_points);

/// sum_i weight_i F_i conj(G_i) over precomputed values on a grid.
Complex grid_inner(std::span<const Complex> f, std::span<const Complex> g, const FockGrid& grid);

/// sum_l w_l (1/2pi) int F(r_l e^{i theta}) conj(G(r_l e^{i theta})) d theta,
/// with 2 n_max + 5 angular points (exact for frequencies up to n_max).
Complex fock_inner(const std::function<Complex(Complex)>& f,
                   const std::function<Complex(Complex)>& g, const RadialMeasure& meas,
                   int n_max);
Complex fock_inner(const std::function<Complex(const MeasurePoint&)>& f,
                   const std::function<Complex(const MeasurePoint&)>& g,
                   const RadialMeasure& meas, int n_max);

}  // namespace qcs
