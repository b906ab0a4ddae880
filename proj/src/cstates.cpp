#include "qcs/cstates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/multiprecision/float128.hpp>

#include "qcs/oscillator.hpp"
#include "qcs/qpoly.hpp"

namespace qcs {

namespace {

using boost::multiprecision::float128;

constexpr Complex kI{0.0, 1.0};

double qq(int n, double q) { return 1.0 / qcoeff_recip(n, q); }

double sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

float128 qpow128(float128 q, int n) {
  float128 p = 1;
  const bool inv = n < 0;
  for (int i = 0; i < std::abs(n); ++i) p *= q;
  return inv ? float128(1) / p : p;
}

float128 qq128(int n, float128 q) {
  float128 p = 1;
  float128 qk = q;
  for (int k = 1; k <= n; ++k) {
    p *= float128(1) - qk;
    qk *= q;
  }
  return p;
}

// P_n(x; a|q) for real arguments, all in binary128.
float128 wall128(int n, float128 x, float128 a, float128 q) {
  float128 sum = 0;
  float128 term = 1;
  float128 qk = 1;
  const float128 q_minus_n = qpow128(q, -n);
  for (int k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    const float128 qk1 = qk * q;
    term *= (float128(1) - q_minus_n * qk) / ((float128(1) - a * qk1) * (float128(1) - qk1)) * q * x;
    qk = qk1;
  }
  return sum;
}

}  // namespace

bool in_domain(Complex z, int m, double q) {
  return m >= 0 && (1.0 - q) * std::norm(z) < std::pow(q, m);
}

PhaseSpacePoint::PhaseSpacePoint(Complex z_, int m_, QDeformation qd_) : z(z_), m(m_), qd(qd_) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "m must be >= 0");
  if (!in_domain(z, m, qd.q())) {
    throw Error(ErrorKind::outside_domain, "outside C_{q,m}: (1-q)|z|^2 >= q^m");
  }
}

Complex coeff_phi(int j, int m, Complex z, double q) {
  require_q(q);
  if (j < 0 || m < 0) throw Error(ErrorKind::invalid_argument, "coefficient indices must be >= 0");
  const double r = std::abs(z);
  const double theta = (r == 0.0) ? 0.0 : std::arg(z);
  const int d = std::abs(m - j);
  const Complex phase = std::polar(1.0, -(m - j) * theta);
  const double x = (1.0 - q) * r * r;
  if (j <= m) {
    const double pref = std::pow(q, 0.5 * j * (j - 1)) * std::pow(std::sqrt(1.0 - q) * r, d) *
                        qq(m, q) * sign(j) /
                        (qq(d, q) * std::sqrt(std::pow(q, double(m) * j) * qq(m, q) * qq(j, q)));
    return pref * phase * wall(j, x, std::pow(q, d), q);
  }
  const double lead =
      sign(m) * std::pow(q, 0.5 * m * (m - 1) - 0.5 * m * m) / std::sqrt(qq(m, q));
  const double grow = std::pow(std::sqrt((1.0 - q) / std::pow(q, m)) * r, d);
  const double shift = std::sqrt(qpoch(std::pow(q, d + 1), q, m).real() / qq(d, q));
  return lead * grow * shift * phase * wall(m, x, std::pow(q, d), q);
}

Complex coeff_phi_lattice(int j, int m, int l, double theta, double q) {
  require_q(q);
  if (j < 0 || m < 0 || l < 0) {
    throw Error(ErrorKind::invalid_argument, "lattice coefficient indices must be >= 0");
  }
  using boost::multiprecision::sqrt;
  const float128 Q(q);
  const int d = std::abs(m - j);
  const float128 x = qpow128(Q, l);
  const float128 a = qpow128(Q, d);
  const Complex phase = std::polar(1.0, -(m - j) * theta);
  float128 v;
  if (j <= m) {
    // (sqrt(1-q) r_l)^d = q^{l d/2}
    const float128 pref = pow(Q, float128(0.5) * j * (j - 1)) * pow(Q, float128(0.5) * l * d) *
                          qq128(m, Q) /
                          (qq128(d, Q) * sqrt(pow(Q, float128(m) * j) * qq128(m, Q) * qq128(j, Q)));
    v = pref * wall128(j, x, a, Q);
    if (j % 2 == 1) v = -v;
  } else {
    const float128 lead = pow(Q, float128(0.5) * m * (m - 1) - float128(0.5) * m * m) /
                          sqrt(qq128(m, Q));
    const float128 grow = pow(Q, float128(0.5) * (l - m) * d);
    float128 shifted = 1;
    for (int k = 0; k < m; ++k) shifted *= float128(1) - qpow128(Q, d + 1 + k);
    const float128 shift = sqrt(shifted / qq128(d, Q));
    v = lead * grow * shift * wall128(m, x, a, Q);
    if (m % 2 == 1) v = -v;
  }
  return static_cast<double>(v) * phase;
}

Complex coeff_phi_hermite(int j, int m, Complex z, double q) {
  require_q(q);
  const double s = std::sqrt(1.0 - q);
  const Complex h = qhermite2d(m, j, s * z, s * std::conj(z), q);
  return h / std::sqrt(std::pow(q, double(m) * j) * qq(j, q) * qq(m, q));
}

double normalization(int m, double x, double q) {
  require_q(q);
  if (m < 0) throw Error(ErrorKind::invalid_argument, "m must be >= 0");
  const double lam = (1.0 - q) * x;
  const double qm = std::pow(q, m);
  if (!(x >= 0.0) || !(lam < qm)) {
    throw Error(ErrorKind::outside_domain, "outside C_{q,m}: (1-q)x must lie in [0, q^m)");
  }
  const double finite = qpoch(lam * std::pow(q, 1 - m), q, m).real();
  return finite / qm * std::exp(-log_qpochhammer_inf(lam / qm, q));
}

SeriesValue cs_wavefunction_series(const PhaseSpacePoint& p, double xi,
                                   CoefficientConvention conv, Truncation trunc) {
  require_truncation(trunc);
  const double q = p.qd.q();
  const int m = p.m;
  const double r = std::abs(p.z);
  const double rho = std::sqrt((1.0 - q) * r * r / std::pow(q, m));
  const double log_qq_inf = log_qpochhammer_inf(q, q);
  const double phi_bound = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi) /
                           (std::exp(1.5 * log_qq_inf) * (1.0 - std::sqrt(q)));

  SeriesValue out;
  Complex sum{0.0, 0.0};
  double log_c = -std::numeric_limits<double>::infinity();
  double tail = 0.0;
  int chunk = 64;
  std::vector<Complex> phis = rs_eigenfunction_sequence(chunk, xi, p.qd);
  for (int j = 0;; ++j) {
    if (j >= trunc.max_terms) {
      throw Error(ErrorKind::truncation_failure, "wave function series hit max_terms");
    }
    if (j >= static_cast<int>(phis.size())) {
      chunk *= 2;
      phis = rs_eigenfunction_sequence(chunk, xi, p.qd);
    }
    Complex c = coeff_phi(j, m, p.z, q);
    if (conv == CoefficientConvention::conjugate) c = std::conj(c);
    sum += c * phis[j];
    if (rho == 0.0) {
      if (j >= m) break;
      continue;
    }
    if (std::abs(c) > 0.0) log_c = std::max(log_c, std::log(std::abs(c)) - j * std::log(rho));
    if (j < m + 2) continue;
    tail = std::exp(log_c + (j + 1) * std::log(rho)) / (1.0 - rho) * phi_bound;
    if (tail < trunc.tol) {
      out.terms_used = j + 1;
      break;
    }
  }
  const double n = normalization(m, r * r, q);
  out.value = sum / std::sqrt(n);
  out.abs_error_estimate = tail / std::sqrt(n);
  if (out.terms_used == 0) out.terms_used = m + 1;
  return out;
}

Complex cs_wavefunction_closed(const PhaseSpacePoint& p, double xi) {
  const double q = p.qd.q();
  const double k = p.qd.kappa();
  const int m = p.m;
  const Complex z = p.z;
  const double lam = (1.0 - q) * std::norm(z);
  const double qm = std::pow(q, m);

  const double inner = qm * std::exp(-xi * xi + log_qpochhammer_inf(lam / qm, q)) /
                       (std::sqrt(std::numbers::pi) * qq(m, q) *
                        qpoch(lam * std::pow(q, 1 - m), q, m).real());
  const double c = std::sqrt((1.0 - q) / std::pow(q, m - 1));
  const double c2 = std::sqrt((1.0 - q) / qm);
  const Complex e = std::exp(kI * k * xi);
  const Complex den = qpoch_inf(kI * z * c, q) * qpoch_inf(-kI * z * c2 * e * e, q);
  const Complex pref = sign(m) * std::sqrt(inner) * std::pow(q, -0.25 * m) * ipow(e, m) / den;

  const Complex u = kI * std::pow(q, 0.25) / e;
  const Complex alpha = z * std::pow(q, -0.25) * c * e;
  const Complex beta = std::conj(z) * std::pow(q, 0.25) * c / e;
  return pref * al_salam_chihara(m, u, alpha, beta, q);
}

Complex cs_wavefunction_m0(Complex z, double xi, const QDeformation& qd) {
  const double q = qd.q();
  if (!in_domain(z, 0, q)) {
    throw Error(ErrorKind::outside_domain, "outside C_{q,0}: (1-q)|z|^2 >= 1");
  }
  const Complex e2 = std::exp(2.0 * kI * qd.kappa() * xi);
  const double eq = qexp(std::norm(z), q).value.real();
  const Complex den = qpoch_inf(-kI * z * std::sqrt(1.0 - q) * e2, q) *
                      qpoch_inf(kI * z * std::sqrt(q * (1.0 - q)), q);
  return std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi) / (std::sqrt(eq) * den);
}

RadialMeasure measure(const QDeformation& qd, double tail_tol) {
  if (!(tail_tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tail_tol must be > 0");
  const double q = qd.q();
  RadialMeasure meas;
  meas.q = q;
  const double log_q = std::log(q);
  double log_w = log_qpochhammer_inf(q, q);
  const double inv_sqrt = 1.0 / std::sqrt(1.0 - q);
  for (int l = 0;; ++l) {
    meas.nodes.push_back(std::exp(0.5 * l * log_q) * inv_sqrt);
    meas.weights.push_back(std::exp(log_w));
    log_w += log_q - std::log1p(-std::exp((l + 1) * log_q));
    // w_{n+1}/w_n = q/(1 - q^{n+1}) decreases in n.
    const double ratio = q / (1.0 - std::exp((l + 2) * log_q));
    if (ratio < 1.0) {
      const double bound = std::exp(log_w) / (1.0 - ratio);
      if (bound < tail_tol) {
        meas.dropped_mass = bound;
        break;
      }
    }
  }
  meas.count = static_cast<int>(meas.nodes.size());
  return meas;
}

FockGrid make_fock_grid(const RadialMeasure& meas, const std::function<int(int)>& angular_points) {
  FockGrid grid;
  for (int l = 0; l < meas.count; ++l) {
    const int n = std::max(1, angular_points(l));
    for (int t = 0; t < n; ++t) {
      const double theta = 2.0 * std::numbers::pi * t / n;
      grid.points.push_back({std::polar(meas.nodes[l], theta), l, theta});
      grid.weights.push_back(meas.weights[l] / n);
    }
  }
  return grid;
}

FockGrid make_fock_grid(const RadialMeasure& meas, int n_max) {
  const int n = 2 * std::max(0, n_max) + 5;
  return make_fock_grid(meas, [n](int) { return n; });
}

Complex grid_inner(std::span<const Complex> f, std::span<const Complex> g, const FockGrid& grid) {
  if (f.size() != grid.points.size() || g.size() != grid.points.size()) {
    throw Error(ErrorKind::invalid_argument, "grid_inner: value count does not match the grid");
  }
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) s += grid.weights[i] * f[i] * std::conj(g[i]);
  return s;
}

Complex fock_inner(const std::function<Complex(const MeasurePoint&)>& f,
                   const std::function<Complex(const MeasurePoint&)>& g,
                   const RadialMeasure& meas, int n_max) {
  const FockGrid grid = make_fock_grid(meas, n_max);
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    s += grid.weights[i] * f(grid.points[i]) * std::conj(g(grid.points[i]));
  }
  return s;
}

Complex fock_inner(const std::function<Complex(Complex)>& f,
                   const std::function<Complex(Complex)>& g, const RadialMeasure& meas,
                   int n_max) {
  return fock_inner([&](const MeasurePoint& p) { return f(p.z); },
                    [&](const MeasurePoint& p) { return g(p.z); }, meas, n_max);
}

}  // namespace qcs
