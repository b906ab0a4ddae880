#include "qcs/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcs {

namespace {

constexpr double kLogSpaceThreshold = 0.999;

// Bound on |prod_{k >= K} (1 - a q^k) - 1| relative to the truncated product,
// given |a| q^K < 1.
double product_tail_bound(double abs_aqK, double q) {
  const double s = abs_aqK / ((1.0 - q) * (1.0 - abs_aqK));
  return std::expm1(s);
}

}  // namespace

QDeformation QDeformation::from_q(double q) {
  require_q(q);
  return QDeformation(q, std::sqrt(-std::log(q) / 2.0));
}

QDeformation QDeformation::from_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorKind::invalid_argument, "kappa must be a positive finite number");
  }
  const double q = std::exp(-2.0 * kappa * kappa);
  require_q(q);
  return QDeformation(q, kappa);
}

void require_q(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "q must lie strictly between 0 and 1");
  }
}

void require_truncation(const Truncation& trunc) {
  if (!(trunc.tol > 0.0) || trunc.max_terms <= 0) {
    throw Error(ErrorKind::invalid_argument, "truncation needs tol > 0 and max_terms > 0");
  }
}

double one_minus_qpow(double q, double p) { return -std::expm1(p * std::log(q)); }

Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex result{1.0, 0.0};
  Complex base = z;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

SeriesValue qpochhammer(Complex a, double q, int n) {
  require_q(q);
  SeriesValue out;
  if (n >= 0) {
    Complex p{1.0, 0.0};
    double qk = 1.0;
    for (int k = 0; k < n; ++k) {
      p *= 1.0 - a * qk;
      qk *= q;
    }
    out.value = p;
    out.terms_used = n;
    return out;
  }
  // (a;q)_{-m} = 1/(a q^{-m};q)_m
  const int m = -n;
  const Complex shifted = a * std::pow(q, -m);
  Complex p{1.0, 0.0};
  double qk = 1.0;
  for (int k = 0; k < m; ++k) {
    const Complex factor = 1.0 - shifted * qk;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (std::abs(factor) <= 8.0 * eps * std::max(1.0, std::abs(shifted * qk))) {
      throw Error(ErrorKind::pole, "pole: vanishing factor in (a;q)_n with n < 0");
    }
    p *= factor;
    qk *= q;
  }
  out.value = 1.0 / p;
  out.terms_used = m;
  return out;
}

SeriesValue qpochhammer(Complex a, double q, Infinity, Truncation trunc) {
  require_q(q);
  require_truncation(trunc);
  SeriesValue out;
  const double abs_a = std::abs(a);
  if (abs_a == 0.0) {
    out.value = 1.0;
    return out;
  }

  const bool real_arg = a.imag() == 0.0;
  if (real_arg && q >= kLogSpaceThreshold && a.real() < 1.0) {
    // Every factor 1 - a q^k is positive here.
    double log_sum = 0.0;
    double qk = 1.0;
    int k = 0;
    while (abs_a * qk >= trunc.tol * (1.0 - q)) {
      if (k >= trunc.max_terms) {
        throw Error(ErrorKind::truncation_failure, "(a;q)_inf did not converge within max_terms");
      }
      log_sum += std::log1p(-a.real() * qk);
      qk *= q;
      ++k;
    }
    out.value = std::exp(log_sum);
    out.abs_error_estimate = std::abs(out.value) * product_tail_bound(abs_a * qk, q);
    out.terms_used = k;
    return out;
  }

  Complex p{1.0, 0.0};
  double qk = 1.0;
  int k = 0;
  while (abs_a * qk >= trunc.tol * (1.0 - q)) {
    if (k >= trunc.max_terms) {
      throw Error(ErrorKind::truncation_failure, "(a;q)_inf did not converge within max_terms");
    }
    p *= 1.0 - a * qk;
    qk *= q;
    ++k;
  }
  out.value = p;
  out.abs_error_estimate = std::abs(p) * product_tail_bound(abs_a * qk, q);
  out.terms_used = k;
  return out;
}

SeriesValue qpochhammer(std::span<const Complex> a, double q, int n) {
  SeriesValue out;
  out.value = 1.0;
  for (const Complex& ai : a) {
    const SeriesValue f = qpochhammer(ai, q, n);
    out.value *= f.value;
    out.terms_used += f.terms_used;
  }
  return out;
}

SeriesValue qpochhammer(std::span<const Complex> a, double q, Infinity, Truncation trunc) {
  SeriesValue out;
  out.value = 1.0;
  double rel = 0.0;
  for (const Complex& ai : a) {
    const SeriesValue f = qpochhammer(ai, q, infinity, trunc);
    if (f.value != Complex{0.0, 0.0}) {
      rel = (1.0 + rel) * (1.0 + f.abs_error_estimate / std::abs(f.value)) - 1.0;
    }
    out.value *= f.value;
    out.terms_used += f.terms_used;
  }
  out.abs_error_estimate = std::abs(out.value) * rel;
  return out;
}

Complex qpoch(Complex a, double q, int n) {
  if (n < 0) {
    throw Error(ErrorKind::invalid_argument, "qpoch expects n >= 0");
  }
  return qpochhammer(a, q, n).value;
}

Complex qpoch_inf(Complex a, double q) { return qpochhammer(a, q, infinity).value; }

double log_qpochhammer_inf(double a, double q, Truncation trunc) {
  require_q(q);
  require_truncation(trunc);
  if (!(a < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "log (a;q)_inf needs real a < 1");
  }
  double sum = 0.0;
  double qk = 1.0;
  int k = 0;
  while (std::abs(a) * qk >= trunc.tol * (1.0 - q)) {
    if (k >= trunc.max_terms) {
      throw Error(ErrorKind::truncation_failure, "log (a;q)_inf did not converge within max_terms");
    }
    sum += std::log1p(-a * qk);
    qk *= q;
    ++k;
  }
  return sum;
}

double qcoeff_recip(int n, double q) {
  require_q(q);
  if (n < 0) return 0.0;
  double p = 1.0;
  for (int k = 1; k <= n; ++k) p *= one_minus_qpow(q, k);
  return 1.0 / p;
}

double qnumber(int n, double q) {
  require_q(q);
  if (n < 0) {
    throw Error(ErrorKind::invalid_argument, "qnumber expects n >= 0");
  }
  return one_minus_qpow(q, n) / (1.0 - q);
}

double qfactorial(int n, double q) {
  require_q(q);
  if (n < 0) {
    throw Error(ErrorKind::invalid_argument, "qfactorial expects n >= 0");
  }
  double p = 1.0;
  for (int k = 1; k <= n; ++k) p *= one_minus_qpow(q, k) / (1.0 - q);
  return p;
}

double qbinomial(int n, int k, double q) {
  require_q(q);
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::invalid_argument, "qbinomial expects 0 <= k <= n");
  }
  k = std::min(k, n - k);
  double p = 1.0;
  for (int i = 1; i <= k; ++i) {
    p *= one_minus_qpow(q, n - k + i) / one_minus_qpow(q, i);
  }
  return p;
}

SeriesValue qexp(Complex xi, double q, Truncation trunc) {
  require_q(q);
  require_truncation(trunc);
  const double abs_xi = std::abs(xi);
  if (!((1.0 - q) * abs_xi < 1.0)) {
    throw Error(ErrorKind::outside_domain,
                "outside domain of convergence: e_q(xi) needs |xi| < 1/(1 - q)");
  }

  // Ratio t_{n+1}/t_n = xi (1 - q)/(1 - q^{n+1}); its modulus decreases in n,
  // so the tail after t_n is bounded by |t_{n+1}|/(1 - r_{n+1}).
  Complex sum{0.0, 0.0};
  Complex term{1.0, 0.0};
  double tail = 0.0;
  int n = 0;
  for (;; ++n) {
    if (n >= trunc.max_terms) {
      throw Error(ErrorKind::truncation_failure, "e_q series did not converge within max_terms");
    }
    sum += term;
    const Complex next = term * xi * (1.0 - q) / one_minus_qpow(q, n + 1);
    const double r = abs_xi * (1.0 - q) / one_minus_qpow(q, n + 2);
    if (r < 1.0) {
      tail = std::abs(next) / (1.0 - r);
      if (tail < trunc.tol) break;
    }
    term = next;
  }

  const SeriesValue prod = qpochhammer((1.0 - q) * xi, q, infinity, trunc);
  const Complex from_product = 1.0 / prod.value;
  const double prod_err = prod.abs_error_estimate / std::norm(prod.value);

  SeriesValue out;
  out.value = sum;
  out.terms_used = n + 1;
  out.abs_error_estimate = std::max(tail + prod_err, std::abs(sum - from_product));
  return out;
}

}  // namespace qcs
