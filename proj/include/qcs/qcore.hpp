// q-calculus primitives: q-Pochhammer symbols, q-numbers, q-factorials,
// q-binomials and the q-exponential e_q.
//
// Everything here is a pure function of its arguments. Infinite objects
// come back as SeriesValue so callers can see how much of the tail was
// dropped.
#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace qcs {

using Complex = std::complex<double>;

enum class ErrorKind {
  invalid_argument,
  pole,
  outside_domain,
  divergent_series,
  truncation_failure,
  invalid_wall_parameter,
  shift_outside_strip,
  quadrature_failure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// The deformation parameter, stored as both q and kappa with q = exp(-2 kappa^2).
class QDeformation {
 public:
  static QDeformation from_q(double q);
  static QDeformation from_kappa(double kappa);

  double q() const noexcept { return q_; }
  double kappa() const noexcept { return kappa_; }

 private:
  QDeformation(double q, double kappa) : q_(q), kappa_(kappa) {}
  double q_;
  double kappa_;
};

/// A complex value with an upper bound on the dropped tail.
struct SeriesValue {
  Complex value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  int terms_used = 0;
};

/// Stopping rule for infinite sums and products.
struct Truncation {
  double tol = 1e-15;
  int max_terms = 1'000'000;
};

struct Infinity {};
inline constexpr Infinity infinity{};

/// Throws ErrorKind::invalid_argument unless 0 < q < 1.
void require_q(double q);
void require_truncation(const Truncation& trunc);

/// (a;q)_n for any integer n. n >= 0 is the plain product of n factors.
/// n < 0 uses (a;q)_{-m} = 1 / (a q^{-m};q)_m and throws ErrorKind::pole
/// when a factor of that product vanishes.
SeriesValue qpochhammer(Complex a, double q, int n);

/// (a;q)_inf. Terminates once |a| q^k < tol (1 - q). Real arguments with
/// q >= 0.999 are accumulated in log space.
SeriesValue qpochhammer(Complex a, double q, Infinity, Truncation trunc = {});

/// (a_1, ..., a_r; q)_n = prod_i (a_i;q)_n.
SeriesValue qpochhammer(std::span<const Complex> a, double q, int n);
SeriesValue qpochhammer(std::span<const Complex> a, double q, Infinity,
                        Truncation trunc = {});

/// Plain value of the finite (a;q)_n, n >= 0.
Complex qpoch(Complex a, double q, int n);
/// Plain value of (a;q)_inf with default truncation.
Complex qpoch_inf(Complex a, double q);

/// log (a;q)_inf for real a < 1. Survives where (a;q)_inf itself underflows
/// (e.g. (q;q)_inf as q -> 1).
double log_qpochhammer_inf(double a, double q, Truncation trunc = {});

/// 1/(q;q)_n, with the convention that it is exactly 0 for n < 0.
double qcoeff_recip(int n, double q);

/// [n]_q = (1 - q^n)/(1 - q).
double qnumber(int n, double q);
/// [n]_q! = (q;q)_n / (1 - q)^n.
double qfactorial(int n, double q);
/// Gaussian binomial [n choose k]_q, 0 <= k <= n.
double qbinomial(int n, int k, double q);

/// e_q(xi) = sum xi^n/[n]_q! = 1/((1 - q) xi;q)_inf for |xi| < 1/(1 - q).
/// The series and the product are both evaluated; their disagreement is
/// folded into the error estimate.
SeriesValue qexp(Complex xi, double q, Truncation trunc = {});

/// 1 - q^p for real p, computed without cancellation.
double one_minus_qpow(double q, double p);

/// z^n by repeated squaring; ipow(0, 0) = 1 and negative n inverts.
Complex ipow(Complex z, int n);

}  // namespace qcs
