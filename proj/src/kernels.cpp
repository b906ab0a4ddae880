#include "qcs/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qcs/qpoly.hpp"
#include "qcs/qseries.hpp"

namespace qcs {

namespace {

double rho(Complex z, int m, double q) {
  return std::sqrt((1.0 - q) * std::norm(z) / std::pow(q, m));
}

SeriesValue sum_kernel_series(const std::function<Complex(int)>& term, double rate, int m,
                              Truncation trunc) {
  require_truncation(trunc);
  if (!(rate < 1.0)) {
    throw Error(ErrorKind::divergent_series, "divergent series: kernel series needs rho_z rho_w < 1");
  }
  SeriesValue out;
  Complex sum{0.0, 0.0};
  double log_c = -std::numeric_limits<double>::infinity();
  for (int j = 0;; ++j) {
    if (j >= trunc.max_terms) {
      throw Error(ErrorKind::truncation_failure, "kernel series hit max_terms");
    }
    const Complex t = term(j);
    sum += t;
    if (rate == 0.0) {
      if (j >= m) {
        out.terms_used = j + 1;
        break;
      }
      continue;
    }
    if (std::abs(t) > 0.0) log_c = std::max(log_c, std::log(std::abs(t)) - j * std::log(rate));
    if (j < m + 2) continue;
    const double tail = std::exp(log_c + (j + 1) * std::log(rate)) / (1.0 - rate);
    if (tail < trunc.tol * std::max(1.0, std::abs(sum))) {
      out.abs_error_estimate = tail;
      out.terms_used = j + 1;
      break;
    }
  }
  out.value = sum;
  return out;
}

}  // namespace

SeriesValue kernel_qm_series(Complex z, Complex w, int m, double q, Truncation trunc) {
  require_q(q);
  return sum_kernel_series(
      [&](int j) { return coeff_phi(j, m, z, q) * std::conj(coeff_phi(j, m, w, q)); },
      rho(z, m, q) * rho(w, m, q), m, trunc);
}

SeriesValue kernel_qm_series(Complex z, const MeasurePoint& w, int m, double q,
                             Truncation trunc) {
  require_q(q);
  // On circle l the lattice coefficients decay like q^{|l-m| j/2}.
  const double rate_w = std::pow(q, 0.5 * std::abs(w.l - m));
  return sum_kernel_series(
      [&](int j) {
        return coeff_phi(j, m, z, q) * std::conj(coeff_phi_lattice(j, m, w.l, w.theta, q));
      },
      rho(z, m, q) * rate_w, m, trunc);
}

Complex kernel_qm_closed(Complex z, Complex w, int m, double q) {
  require_q(q);
  if (m < 0) throw Error(ErrorKind::invalid_argument, "m must be >= 0");
  if (std::abs(w) < 1e-8 * std::max(1.0, std::abs(z))) {
    return kernel_qm_series(z, w, m, q).value;
  }
  const double a = (1.0 - q) * std::norm(z);
  const Complex lam = (1.0 - q) * z * std::conj(w);
  const double qm = std::pow(q, m);
  const Complex ratio = z / w;
  const Complex pref = qpoch(a * std::pow(q, 1 - m), q, m) / (qm * qpoch_inf(lam / qm, q));
  const Complex s = phi32_terminating(m, ratio, q * std::conj(ratio), q, a * std::pow(q, 1 - m),
                                      q, q * (1.0 - q) * std::norm(w));
  return pref * s;
}

Complex kernel_qm_intermediate(Complex z, Complex w, int m, double q) {
  require_q(q);
  if (m < 0) throw Error(ErrorKind::invalid_argument, "m must be >= 0");
  if (z == Complex{0.0, 0.0} || w == Complex{0.0, 0.0}) {
    throw Error(ErrorKind::invalid_argument, "intermediate kernel form needs z, w != 0");
  }
  const double a = (1.0 - q) * std::norm(z);
  const Complex lam = (1.0 - q) * z * std::conj(w);
  const double qm = std::pow(q, m);
  const Complex ratio = z / w;
  const Complex pref = qpoch(a * std::pow(q, 1 - m), q, m) * qpoch(q / ratio, q, m) /
                       (qm * qpoch_inf(lam / qm, q) * qpoch(q, q, m));
  const Complex s = phi32_terminating(m, lam / qm, ratio, a * std::pow(q, 1 - m), ratio / qm, q, q);
  return pref * s;
}

Complex arik_coon_kernel(Complex z, Complex w, double q) {
  return qexp(z * std::conj(w), q).value;
}

Complex kernel_classical(Complex z, Complex w, int m) {
  return std::exp(z * std::conj(w)) * laguerre0(m, std::norm(z - w));
}

Complex kernel_qm(Complex z, Complex w, int m, double q) {
  if (in_domain(z, m, q) && in_domain(w, m, q)) return kernel_qm_closed(z, w, m, q);
  return kernel_qm_series(z, w, m, q).value;
}

}  // namespace qcs
