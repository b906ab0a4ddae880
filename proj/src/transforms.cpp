#include "qcs/transforms.hpp"

#include <cmath>
#include <numbers>

#include "qcs/qpoly.hpp"

namespace qcs {

namespace {

constexpr Complex kI{0.0, 1.0};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_samples(std::span<const Complex> f, const QuadratureRule& rule) {
  if (f.size() != rule.nodes.size()) {
    throw Error(ErrorKind::invalid_argument, "sample count does not match the quadrature rule");
  }
}

}  // namespace

std::vector<Complex> sample(const AnalyticFunction& f, const QuadratureRule& rule) {
  std::vector<Complex> v(rule.nodes.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(rule.nodes[i]);
  return v;
}

CstKernel::CstKernel(const PhaseSpacePoint& p, const QuadratureRule& rule) : rule_(&rule) {
  const double q = p.qd.q();
  const double k = p.qd.kappa();
  const int m = p.m;
  const Complex z = p.z;
  const double c = std::sqrt((1.0 - q) / std::pow(q, m - 1));
  const double c2 = std::sqrt((1.0 - q) / std::pow(q, m));
  const Complex pref = ((m % 2 == 0) ? 1.0 : -1.0) *
                       std::sqrt(std::pow(q, -0.5 * m) * qcoeff_recip(m, q) /
                                 std::sqrt(std::numbers::pi)) /
                       qpoch_inf(kI * z * c, q);
  const double q4 = std::pow(q, 0.25);
  k_.resize(rule.nodes.size());
  for (std::size_t i = 0; i < k_.size(); ++i) {
    const double xi = rule.nodes[i];
    const Complex e = std::exp(kI * k * xi);
    const Complex asc = al_salam_chihara(m, kI * q4 / e, z * c * e / q4, std::conj(z) * q4 * c / e, q);
    k_[i] = rule.weights[i] * pref * ipow(e, m) * std::exp(-0.5 * xi * xi) * asc /
            qpoch_inf(-kI * z * c2 * e * e, q);
  }
}

Complex CstKernel::apply(std::span<const Complex> f_at_nodes) const {
  require_samples(f_at_nodes, *rule_);
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < k_.size(); ++i) s += k_[i] * f_at_nodes[i];
  return s;
}

Complex CstKernel::apply(const AnalyticFunction& f) const { return apply(sample(f, *rule_)); }

Complex cst(const AnalyticFunction& f, const PhaseSpacePoint& p, const QuadratureRule& rule) {
  return CstKernel(p, rule).apply(f);
}

Complex cst_via_wavefunction(const AnalyticFunction& f, const PhaseSpacePoint& p,
                             const QuadratureRule& rule) {
  const double n = normalization(p.m, std::norm(p.z), p.qd.q());
  const SeriesValue v =
      integrate_real_line([&](double xi) { return f(xi) * cs_wavefunction_closed(p, xi); }, rule);
  return std::sqrt(n) * v.value;
}

Complex cst0(const AnalyticFunction& f, Complex z, const QDeformation& qd,
             const QuadratureRule& rule) {
  const double q = qd.q();
  if (!in_domain(z, 0, q)) {
    throw Error(ErrorKind::outside_domain, "outside C_{q,0}: (1-q)|z|^2 >= 1");
  }
  const double k = qd.kappa();
  const double s = std::sqrt(1.0 - q);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double xi = rule.nodes[i];
    const Complex e2 = std::exp(2.0 * kI * k * xi);
    sum += rule.weights[i] * std::exp(-0.5 * xi * xi) * f(xi) / qpoch_inf(-kI * z * s * e2, q);
  }
  return std::pow(std::numbers::pi, -0.25) / qpoch_inf(kI * z * std::sqrt(q * (1.0 - q)), q) * sum;
}

std::vector<Complex> rs_coefficients(std::span<const Complex> f_at_nodes,
                                     const QuadratureRule& rule, int j_max,
                                     const QDeformation& qd) {
  require_samples(f_at_nodes, rule);
  std::vector<Complex> c(j_max + 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const std::vector<Complex> phi = rs_eigenfunction_sequence(j_max, rule.nodes[i], qd);
    const Complex wf = rule.weights[i] * f_at_nodes[i];
    for (int j = 0; j <= j_max; ++j) c[j] += wf * phi[j];
  }
  return c;
}

Complex cst_coefficient_series(std::span<const Complex> c, Complex z, int m, double q) {
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * coeff_phi(static_cast<int>(j), m, z, q);
  return s;
}

Complex cst_coefficient_series(std::span<const Complex> c, const MeasurePoint& w, int m,
                               double q) {
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < c.size(); ++j) {
    s += c[j] * coeff_phi_lattice(static_cast<int>(j), m, w.l, w.theta, q);
  }
  return s;
}

Complex bargmann_classical(const AnalyticFunction& f, Complex z, const QuadratureRule& rule) {
  const double sqrt2 = std::numbers::sqrt2;
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double xi = rule.nodes[i];
    sum += rule.weights[i] * std::exp(-0.5 * xi * xi + sqrt2 * xi * z - 0.5 * z * z) * f(xi);
  }
  return std::pow(std::numbers::pi, -0.25) * sum;
}

Complex polyanalytic_bargmann(const AnalyticFunction& f, Complex z, int m,
                              const QuadratureRule& rule, HermiteShift shift) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "m must be >= 0");
  const double sqrt2 = std::numbers::sqrt2;
  const double div = (shift == HermiteShift::sqrt2) ? sqrt2 : 2.0;
  const double centre = 2.0 * z.real() / div;
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double xi = rule.nodes[i];
    sum += rule.weights[i] * std::exp(-0.5 * z * z - 0.5 * xi * xi + sqrt2 * xi * z) *
           hermite(m, xi - centre) * f(xi);
  }
  const double norm = std::sqrt(std::pow(2.0, m) * factorial(m) * std::sqrt(std::numbers::pi));
  return ((m % 2 == 0) ? 1.0 : -1.0) * sum / norm;
}

}  // namespace qcs
