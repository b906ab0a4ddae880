// Coherent-state transforms L^2(R) -> functions on C_{q,m}, and their
// classical q -> 1 targets.
#pragma once

#include <span>
#include <vector>

#include "qcs/cstates.hpp"
#include "qcs/oscillator.hpp"

namespace qcs {

/// f at the primary nodes of a rule.
std::vector<Complex> sample(const AnalyticFunction& f, const QuadratureRule& rule);

/// The integrand of B_m^{(q)} at one z, folded with the quadrature weights:
///   k_i = w_i P e^{i m kappa xi_i} e^{-xi_i^2/2} Q_m(.) / (-i z c' e^{2 i kappa xi_i};q)_inf,
///   P = (q^{-m/2}/(sqrt(pi)(q;q)_m))^{1/2} (-1)^m / (i z c;q)_inf,
/// c = sqrt((1-q)/q^{m-1}), c' = sqrt((1-q)/q^m). Built once per z and
/// applied to any number of functions sampled on the same rule, which
/// must outlive the kernel.
class CstKernel {
 public:
  CstKernel(const PhaseSpacePoint& p, const QuadratureRule& rule);

  Complex apply(std::span<const Complex> f_at_nodes) const;
  Complex apply(const AnalyticFunction& f) const;
  const std::vector<Complex>& values() const noexcept { return k_; }

 private:
  const QuadratureRule* rule_;
  std::vector<Complex> k_;
};

/// B_m^{(q)}[f](z) by quadrature.
Complex cst(const AnalyticFunction& f, const PhaseSpacePoint& p, const QuadratureRule& rule);

/// N^{1/2}(|z|^2) times the integral of f Psi_z^{q,m} (closed form), with no conjugation.
Complex cst_via_wavefunction(const AnalyticFunction& f, const PhaseSpacePoint& p,
                             const QuadratureRule& rule);

/// B_0^{(q)}[f](z) = pi^{-1/4}/(i z sqrt(q(1-q));q)_inf
///   * integral of e^{-xi^2/2} f(xi) / (-i z sqrt(1-q) e^{2 i kappa xi};q)_inf.
Complex cst0(const AnalyticFunction& f, Complex z, const QDeformation& qd,
             const QuadratureRule& rule);

/// c_j = integral of f phi_j, j = 0..j_max.
std::vector<Complex> rs_coefficients(std::span<const Complex> f_at_nodes,
                                     const QuadratureRule& rule, int j_max,
                                     const QDeformation& qd);

/// sum_j c_j Phi_j^{q,m}(z), the transform written through its coefficients.
Complex cst_coefficient_series(std::span<const Complex> c, Complex z, int m, double q);
/// Same with lattice coefficients at a node of the radial measure.
Complex cst_coefficient_series(std::span<const Complex> c, const MeasurePoint& w, int m,
                               double q);

/// pi^{-1/4} integral of exp(-xi^2/2 + sqrt(2) xi z - z^2/2) f(xi).
Complex bargmann_classical(const AnalyticFunction& f, Complex z, const QuadratureRule& rule);

enum class HermiteShift {
  /// H_m(xi - (z + conj z)/sqrt 2)
  sqrt2,
  /// H_m(xi - (z + conj z)/2)
  half,
};

/// (-1)^m (2^m m! sqrt(pi))^{-1/2}
///   * integral of e^{-z^2/2 - xi^2/2 + sqrt(2) xi z} H_m(xi - shift(z)) f(xi).
Complex polyanalytic_bargmann(const AnalyticFunction& f, Complex z, int m,
                              const QuadratureRule& rule,
                              HermiteShift shift = HermiteShift::sqrt2);

}  // namespace qcs
