#include "qcs/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qcs/qseries.hpp"

namespace qcs {

namespace {

void require_degree(int n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "polynomial degree must be >= 0");
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Gaussian binomial for a base p > 1, as a plain product of ratios.
double gaussian_binomial_large_base(int n, int k, double p) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) {
    b *= (1.0 - std::pow(p, n - k + i)) / (1.0 - std::pow(p, i));
  }
  return b;
}

}  // namespace

Complex wall(int n, Complex x, Complex a, double q) {
  require_degree(n);
  try {
    return phi21_terminating(n, 0.0, a * q, q, q * x);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::pole) {
      throw Error(ErrorKind::invalid_wall_parameter,
                  "invalid Wall parameter: aq = q^{-k} for some k < n");
    }
    throw;
  }
}

Complex wall_reduced(int n, Complex x, Complex a, double q) {
  require_degree(n);
  const Complex c = x * std::pow(q, 1 - n);
  const Complex aq_n = qpoch(a * q, q, n);
  if (std::abs(aq_n) == 0.0) {
    throw Error(ErrorKind::invalid_wall_parameter, "invalid Wall parameter: (aq;q)_n = 0");
  }
  try {
    const Complex s = phi21_terminating(n, 0.0, c, q, a * std::pow(q, n + 1));
    return qpoch(c, q, n) / aq_n * s;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::pole) {
      throw Error(ErrorKind::invalid_wall_parameter,
                  "invalid Wall parameter: x q^{1-n} = q^{-k} for some k < n");
    }
    throw;
  }
}

Complex rogers_szego(int n, Complex xi, double q) {
  require_degree(n);
  const Complex t = xi / std::sqrt(q);
  Complex sum{0.0, 0.0};
  Complex tk{1.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    sum += qbinomial(n, k, q) * tk;
    tk *= t;
  }
  return sum;
}

Complex stieltjes_wigert(int n, Complex x, double q) {
  require_degree(n);
  Complex sum{0.0, 0.0};
  Complex xk{1.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    sum += qbinomial(n, k, q) * std::pow(q, double(k) * k) * xk;
    xk *= x;
  }
  return sum;
}

Complex stieltjes_wigert_inverse_base(int n, Complex x, double q) {
  require_degree(n);
  require_q(q);
  const double p = 1.0 / q;
  Complex sum{0.0, 0.0};
  Complex xk{1.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    sum += gaussian_binomial_large_base(n, k, p) * std::pow(p, double(k) * k) * xk;
    xk *= x;
  }
  return sum;
}

// sum_n Q_n t^n/(q;q)_n = (alpha t, beta t;q)_inf / (t u, t/u;q)_inf.
// The denominator expands through the q-binomial theorem into c_k, the
// numerator through Euler's identity into d_l, and Q_n/(q;q)_n is their
// Cauchy product.
Complex al_salam_chihara(int m, Complex u, Complex alpha, Complex beta, double q) {
  require_degree(m);
  require_q(q);
  if (u == Complex{0.0, 0.0}) {
    throw Error(ErrorKind::invalid_argument, "Al-Salam-Chihara needs u != 0");
  }
  std::vector<double> rq(m + 1);
  for (int k = 0; k <= m; ++k) rq[k] = qcoeff_recip(k, q);

  std::vector<Complex> c(m + 1), d(m + 1);
  for (int k = 0; k <= m; ++k) {
    Complex s{0.0, 0.0};
    for (int r = 0; r <= k; ++r) s += ipow(u, 2 * r - k) * rq[r] * rq[k - r];
    c[k] = s;
  }
  for (int l = 0; l <= m; ++l) {
    Complex s{0.0, 0.0};
    for (int r = 0; r <= l; ++r) {
      const double e = 0.5 * r * (r - 1) + 0.5 * (l - r) * (l - r - 1);
      s += std::pow(q, e) * ipow(alpha, r) * ipow(beta, l - r) * rq[r] * rq[l - r];
    }
    d[l] = (l % 2 == 0) ? s : -s;
  }
  Complex sum{0.0, 0.0};
  for (int k = 0; k <= m; ++k) sum += c[k] * d[m - k];
  return sum / rq[m];
}

Complex al_salam_chihara_hypergeometric(int m, Complex u, Complex alpha, Complex beta,
                                        double q) {
  require_degree(m);
  if (alpha == Complex{0.0, 0.0} || u == Complex{0.0, 0.0}) {
    throw Error(ErrorKind::invalid_argument, "hypergeometric form needs alpha != 0 and u != 0");
  }
  const Complex s = phi32_terminating(m, alpha * u, alpha / u, alpha * beta, 0.0, q, q);
  return qpoch(alpha * beta, q, m) / ipow(alpha, m) * s;
}

Complex qhermite2d(int m, int j, Complex z, Complex zeta, double q) {
  require_degree(m);
  require_degree(j);
  Complex sum{0.0, 0.0};
  for (int k = 0; k <= std::min(m, j); ++k) {
    const double coef = qbinomial(m, k, q) * qbinomial(j, k, q) *
                        std::pow(q, 0.5 * k * (k - 1)) / qcoeff_recip(k, q);
    const Complex t = coef * ipow(z, m - k) * ipow(zeta, j - k);
    sum += (k % 2 == 0) ? t : -t;
  }
  return sum;
}

Complex hermite(int n, Complex x) {
  require_degree(n);
  Complex sum{0.0, 0.0};
  for (int k = 0; 2 * k <= n; ++k) {
    const Complex t = ipow(2.0 * x, n - 2 * k) / (factorial(k) * factorial(n - 2 * k));
    sum += (k % 2 == 0) ? t : -t;
  }
  return factorial(n) * sum;
}

Complex laguerre0(int m, Complex x) {
  require_degree(m);
  Complex sum{0.0, 0.0};
  for (int k = 0; k <= m; ++k) {
    const Complex t = binomial(m, k) * ipow(x, k) / factorial(k);
    sum += (k % 2 == 0) ? t : -t;
  }
  return sum;
}

Complex complex_hermite(int m, int j, Complex z, Complex zeta) {
  require_degree(m);
  require_degree(j);
  Complex sum{0.0, 0.0};
  for (int k = 0; k <= std::min(m, j); ++k) {
    const Complex t =
        factorial(k) * binomial(m, k) * binomial(j, k) * ipow(z, m - k) * ipow(zeta, j - k);
    sum += (k % 2 == 0) ? t : -t;
  }
  return sum;
}

}  // namespace qcs
