#include "qcs/qseries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/multiprecision/complex128.hpp>

namespace qcs {

namespace {

using boost::multiprecision::complex128;
using boost::multiprecision::float128;

constexpr double kTerminationRelTol = 1e-10;
constexpr int kTerminationMaxIndex = 10'000;

complex128 to_quad(Complex c) { return complex128(float128(c.real()), float128(c.imag())); }

Complex to_double(const complex128& c) {
  return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
}

bool vanishes(const complex128& factor, const complex128& scale) {
  using boost::multiprecision::abs;
  const float128 s = std::max(float128(1), float128(abs(scale)));
  return abs(factor) <= float128(1e-13) * s;
}

// Sum of n + 1 terms with upper parameters {q^{-n}} U rest_upper.
Complex sum_terminating(int n, std::span<const Complex> rest_upper,
                        std::span<const Complex> lower, double q, Complex z) {
  const float128 qq(q);
  float128 q_minus_n = 1;
  for (int i = 0; i < n; ++i) q_minus_n /= qq;

  std::vector<complex128> up;
  up.reserve(rest_upper.size());
  for (const Complex& a : rest_upper) up.push_back(to_quad(a));
  std::vector<complex128> lo;
  lo.reserve(lower.size());
  for (const Complex& b : lower) lo.push_back(to_quad(b));
  const complex128 zz = to_quad(z);

  complex128 sum(0);
  complex128 term(1);
  float128 qk = 1;
  for (int k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    complex128 num = complex128(float128(1) - q_minus_n * qk);
    for (const complex128& a : up) num *= complex128(1) - a * qk;
    complex128 den = complex128(float128(1) - qk * qq);
    for (const complex128& b : lo) {
      const complex128 f = complex128(1) - b * qk;
      if (vanishes(f, b * qk)) {
        throw Error(ErrorKind::pole, "pole in denominator parameters");
      }
      den *= f;
    }
    term = term * num / den * zz;
    if (term == complex128(0)) break;
    qk *= qq;
  }
  return to_double(sum);
}

SeriesValue sum_convergent(std::span<const Complex> upper, std::span<const Complex> lower,
                           double q, Complex z, Truncation trunc) {
  const double abs_z = std::abs(z);
  if (!(abs_z < 1.0)) {
    throw Error(ErrorKind::divergent_series, "divergent series: non-terminating with |z| >= 1");
  }
  std::vector<double> abs_up;
  for (const Complex& a : upper) abs_up.push_back(std::abs(a));
  std::vector<double> abs_lo;
  for (const Complex& b : lower) abs_lo.push_back(std::abs(b));

  SeriesValue out;
  Complex sum{0.0, 0.0};
  Complex term{1.0, 0.0};
  double qk = 1.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int k = 0;; ++k) {
    if (k >= trunc.max_terms) {
      throw Error(ErrorKind::truncation_failure, "basic hypergeometric series hit max_terms");
    }
    sum += term;
    Complex ratio = z / (1.0 - qk * q);
    for (const Complex& a : upper) ratio *= 1.0 - a * qk;
    for (const Complex& b : lower) {
      const Complex f = 1.0 - b * qk;
      if (std::abs(f) <= 8.0 * eps * std::max(1.0, std::abs(b * qk))) {
        throw Error(ErrorKind::pole, "pole in denominator parameters");
      }
      ratio /= f;
    }
    const Complex next = term * ratio;

    // sup of |t_{j+1}/t_j| over j > k
    const double qn = qk * q;
    double r = abs_z / (1.0 - qn * q);
    bool bounded = true;
    for (double a : abs_up) r *= 1.0 + a * qn;
    for (double b : abs_lo) {
      if (b * qn >= 1.0) {
        bounded = false;
        break;
      }
      r /= 1.0 - b * qn;
    }
    if (bounded && r < 1.0) {
      const double tail = std::abs(next) / (1.0 - r);
      if (tail < trunc.tol) {
        out.value = sum;
        out.abs_error_estimate = tail;
        out.terms_used = k + 1;
        return out;
      }
    }
    if (next == Complex{0.0, 0.0}) {
      out.value = sum;
      out.terms_used = k + 1;
      return out;
    }
    term = next;
    qk = qn;
  }
}

}  // namespace

std::optional<int> termination_index(Complex p, double q) {
  require_q(q);
  if (!(p.real() >= 1.0 - kTerminationRelTol)) return std::nullopt;
  const double n_est = std::log(std::abs(p)) / -std::log(q);
  const long n = std::lround(n_est);
  if (n < 0 || n > kTerminationMaxIndex) return std::nullopt;
  const double target = std::pow(q, -static_cast<double>(n));
  if (std::abs(p - target) <= kTerminationRelTol * target) return static_cast<int>(n);
  return std::nullopt;
}

SeriesValue basic_hypergeometric(std::span<const Complex> upper,
                                 std::span<const Complex> lower, double q, Complex z,
                                 Truncation trunc) {
  require_q(q);
  require_truncation(trunc);
  if (upper.size() != lower.size() + 1) {
    throw Error(ErrorKind::invalid_argument, "basic_hypergeometric expects r = s + 1");
  }

  std::optional<int> n_term;
  std::size_t which = 0;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const auto n = termination_index(upper[i], q);
    if (n && (!n_term || *n < *n_term)) {
      n_term = n;
      which = i;
    }
  }

  SeriesValue out;
  if (n_term) {
    std::vector<Complex> rest;
    for (std::size_t i = 0; i < upper.size(); ++i) {
      if (i != which) rest.push_back(upper[i]);
    }
    out.value = sum_terminating(*n_term, rest, lower, q, z);
    out.terms_used = *n_term + 1;
    return out;
  }
  return sum_convergent(upper, lower, q, z, trunc);
}

SeriesValue phi21(Complex a, Complex b, Complex c, double q, Complex z, Truncation trunc) {
  const std::array<Complex, 2> up{a, b};
  const std::array<Complex, 1> lo{c};
  return basic_hypergeometric(up, lo, q, z, trunc);
}

SeriesValue phi32(Complex a1, Complex a2, Complex a3, Complex b1, Complex b2, double q,
                  Complex z, Truncation trunc) {
  const std::array<Complex, 3> up{a1, a2, a3};
  const std::array<Complex, 2> lo{b1, b2};
  return basic_hypergeometric(up, lo, q, z, trunc);
}

Complex phi21_terminating(int n, Complex b, Complex c, double q, Complex z) {
  require_q(q);
  if (n < 0) throw Error(ErrorKind::invalid_argument, "termination index must be >= 0");
  const std::array<Complex, 1> up{b};
  const std::array<Complex, 1> lo{c};
  return sum_terminating(n, up, lo, q, z);
}

Complex phi32_terminating(int n, Complex a2, Complex a3, Complex b1, Complex b2, double q,
                          Complex z) {
  require_q(q);
  if (n < 0) throw Error(ErrorKind::invalid_argument, "termination index must be >= 0");
  const std::array<Complex, 2> up{a2, a3};
  const std::array<Complex, 2> lo{b1, b2};
  return sum_terminating(n, up, lo, q, z);
}

}  // namespace qcs
