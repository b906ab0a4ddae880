// The Rogers-Szego q-oscillator on L^2(R).
//
// Ladder operators act by the complex shift f(x) -> f(x + i kappa), so the
// functions they act on must be evaluable off the real axis. Quadrature
// over the real line uses composite Gauss-Legendre panels sized for
// Gaussian-times-trigonometric integrands.
#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "qcs/qcore.hpp"

namespace qcs {

/// A function evaluable on the strip |Im x| <= strip_halfwidth.
class AnalyticFunction {
 public:
  using Fn = std::function<Complex(Complex)>;

  AnalyticFunction() = default;
  explicit AnalyticFunction(Fn fn,
                            double strip_halfwidth = std::numeric_limits<double>::infinity())
      : fn_(std::move(fn)), strip_(strip_halfwidth) {}

  /// Throws ErrorKind::shift_outside_strip if x is outside the strip.
  Complex operator()(Complex x) const;
  double strip_halfwidth() const noexcept { return strip_; }
  bool contains(Complex x) const noexcept { return std::abs(x.imag()) <= strip_; }

 private:
  Fn fn_;
  double strip_ = std::numeric_limits<double>::infinity();
};

/// phi_j(x) = (i sqrt q)^j / (pi^{1/4} sqrt((q;q)_j)) H_j(-e^{2 i kappa x};q) e^{-x^2/2}.
Complex rs_eigenfunction(int j, Complex x, const QDeformation& qd);
AnalyticFunction rs_function(int j, const QDeformation& qd);

/// phi_0(x), ..., phi_n(x) from H_{j+1} = (1 + t) H_j - t (1 - q^j) H_{j-1},
/// t = q^{-1/2} xi, carried in normalized form.
std::vector<Complex> rs_eigenfunction_sequence(int n, Complex x, const QDeformation& qd);

/// pi^{-1/4} e^{-x^2/2}.
AnalyticFunction gaussian_ground_state();

/// B* f(x) = e^{i kappa x}/(i sqrt(1-q)) (e^{i kappa x} f(x) - q^{3/4} f(x + i kappa)).
Complex apply_creation(const AnalyticFunction& f, Complex x, const QDeformation& qd);
/// B f(x) = -e^{-i kappa x}/(i sqrt(1-q)) (e^{-i kappa x} f(x) - q^{1/4} f(x + i kappa)).
Complex apply_annihilation(const AnalyticFunction& f, Complex x, const QDeformation& qd);

/// The four-term shift form of (B B* + B* B)/2:
///   1/(2(q-1)) [ -2 f(x) + (q^{1/4} + q^{5/4}) e^{i kappa x} f(x + i kappa)
///                + (q^{-1/4} + q^{3/4}) e^{-i kappa x} f(x + i kappa)
///                - (q^{1/2} + q^{3/2}) f(x + 2 i kappa) ].
Complex apply_hamiltonian(const AnalyticFunction& f, Complex x, const QDeformation& qd);

/// Same four terms with +(q^{1/2} + q^{3/2}) on the double shift.
Complex apply_hamiltonian_plus_sign(const AnalyticFunction& f, Complex x,
                                    const QDeformation& qd);

/// B* f and B f as functions; their strip shrinks by kappa.
AnalyticFunction creation(const AnalyticFunction& f, const QDeformation& qd);
AnalyticFunction annihilation(const AnalyticFunction& f, const QDeformation& qd);

/// eps_j = ([j+1]_q + [j]_q)/2.
double energy(int j, double q);

/// Composite Gauss-Legendre rule on [-R, R]. The companion rule uses fewer
/// points on the same panels; the difference of the two is the error estimate.
struct QuadratureRule {
  double radius = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> companion_nodes;
  std::vector<double> companion_weights;
  double tol = 1e-10;
  /// |sum w e^{-x^2} - sqrt(pi)| for this rule.
  double est_error = 0.0;
};

/// R = max(8, sqrt(2 ln(1/tol)) + 2 kappa j_max), panel width
/// <= min(1, pi/(4 kappa (2 j_max + m))).
QuadratureRule make_quadrature_rule(const QDeformation& qd, int j_max, int m = 0,
                                    double tol = 1e-10);

/// Uniform panels of width <= panel_width on [-radius, radius].
QuadratureRule make_panel_rule(double radius, double panel_width, double tol = 1e-10);

/// Integral of g over the real line. abs_error_estimate is the
/// primary/companion disagreement; throws ErrorKind::quadrature_failure
/// when it exceeds 100 tol max(1, |value|).
SeriesValue integrate_real_line(const std::function<Complex(double)>& g,
                                const QuadratureRule& rule);

/// Primary nodes only, no error estimate.
Complex integrate_real_line_fast(const std::function<Complex(double)>& g,
                                 const QuadratureRule& rule);

/// Integral of f g with no conjugation.
SeriesValue bilinear_pairing(const AnalyticFunction& f, const AnalyticFunction& g,
                             const QuadratureRule& rule);
/// Integral of f conj(g).
SeriesValue sesquilinear_pairing(const AnalyticFunction& f, const AnalyticFunction& g,
                                 const QuadratureRule& rule);

}  // namespace qcs
