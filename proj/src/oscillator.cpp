#include "qcs/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "qcs/qpoly.hpp"

namespace qcs {

namespace {

constexpr Complex kI{0.0, 1.0};

template <int N>
void append_panel(double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
  using Rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      nodes.push_back(c);
      weights.push_back(h * w[i]);
      continue;
    }
    nodes.push_back(c - h * x[i]);
    weights.push_back(h * w[i]);
    nodes.push_back(c + h * x[i]);
    weights.push_back(h * w[i]);
  }
}

Complex shifted(const AnalyticFunction& f, Complex x, Complex shift) {
  const Complex y = x + shift;
  if (!f.contains(y)) {
    throw Error(ErrorKind::shift_outside_strip, "shift outside analyticity domain");
  }
  return f(y);
}

}  // namespace

Complex AnalyticFunction::operator()(Complex x) const {
  if (!contains(x)) {
    throw Error(ErrorKind::shift_outside_strip, "shift outside analyticity domain");
  }
  return fn_(x);
}

Complex rs_eigenfunction(int j, Complex x, const QDeformation& qd) {
  if (j < 0) throw Error(ErrorKind::invalid_argument, "eigenfunction index must be >= 0");
  const double q = qd.q();
  const Complex phase = ipow(kI * std::sqrt(q), j);
  const double norm = std::pow(std::numbers::pi, -0.25) * std::sqrt(qcoeff_recip(j, q));
  const Complex h = rogers_szego(j, -std::exp(2.0 * kI * qd.kappa() * x), q);
  return phase * norm * h * std::exp(-0.5 * x * x);
}

AnalyticFunction rs_function(int j, const QDeformation& qd) {
  return AnalyticFunction([j, qd](Complex x) { return rs_eigenfunction(j, x, qd); });
}

std::vector<Complex> rs_eigenfunction_sequence(int n, Complex x, const QDeformation& qd) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "eigenfunction index must be >= 0");
  const double q = qd.q();
  const double sq = std::sqrt(q);
  const Complex t = -std::exp(2.0 * kI * qd.kappa() * x) / sq;
  const Complex g0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  std::vector<Complex> out(n + 1);
  out[0] = g0;
  if (n == 0) return out;
  out[1] = kI * sq * (1.0 + t) * g0 / std::sqrt(1.0 - q);
  for (int j = 1; j < n; ++j) {
    const double a = one_minus_qpow(q, j);
    out[j + 1] = (kI * sq * (1.0 + t) * out[j] + q * t * std::sqrt(a) * out[j - 1]) /
                 std::sqrt(one_minus_qpow(q, j + 1));
  }
  return out;
}

AnalyticFunction gaussian_ground_state() {
  return AnalyticFunction(
      [](Complex x) { return std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x); });
}

Complex apply_creation(const AnalyticFunction& f, Complex x, const QDeformation& qd) {
  const double q = qd.q();
  const double k = qd.kappa();
  const Complex e = std::exp(kI * k * x);
  const Complex fs = shifted(f, x, kI * k);
  return e / (kI * std::sqrt(1.0 - q)) * (e * f(x) - std::pow(q, 0.75) * fs);
}

Complex apply_annihilation(const AnalyticFunction& f, Complex x, const QDeformation& qd) {
  const double q = qd.q();
  const double k = qd.kappa();
  const Complex e = std::exp(-kI * k * x);
  const Complex fs = shifted(f, x, kI * k);
  return -e / (kI * std::sqrt(1.0 - q)) * (e * f(x) - std::pow(q, 0.25) * fs);
}

namespace {

Complex hamiltonian_terms(const AnalyticFunction& f, Complex x, const QDeformation& qd,
                          double last_sign) {
  const double q = qd.q();
  const double k = qd.kappa();
  const Complex f1 = shifted(f, x, kI * k);
  const Complex f2 = shifted(f, x, 2.0 * kI * k);
  const Complex e = std::exp(kI * k * x);
  const Complex s = -2.0 * f(x) + (std::pow(q, 0.25) + std::pow(q, 1.25)) * e * f1 +
                    (std::pow(q, -0.25) + std::pow(q, 0.75)) / e * f1 +
                    last_sign * (std::sqrt(q) + std::pow(q, 1.5)) * f2;
  return s / (2.0 * (q - 1.0));
}

}  // namespace

Complex apply_hamiltonian(const AnalyticFunction& f, Complex x, const QDeformation& qd) {
  return hamiltonian_terms(f, x, qd, -1.0);
}

Complex apply_hamiltonian_plus_sign(const AnalyticFunction& f, Complex x,
                                    const QDeformation& qd) {
  return hamiltonian_terms(f, x, qd, 1.0);
}

AnalyticFunction creation(const AnalyticFunction& f, const QDeformation& qd) {
  return AnalyticFunction([f, qd](Complex x) { return apply_creation(f, x, qd); },
                          f.strip_halfwidth() - qd.kappa());
}

AnalyticFunction annihilation(const AnalyticFunction& f, const QDeformation& qd) {
  return AnalyticFunction([f, qd](Complex x) { return apply_annihilation(f, x, qd); },
                          f.strip_halfwidth() - qd.kappa());
}

double energy(int j, double q) {
  if (j < 0) throw Error(ErrorKind::invalid_argument, "energy index must be >= 0");
  return 0.5 * (qnumber(j + 1, q) + qnumber(j, q));
}

QuadratureRule make_panel_rule(double radius, double panel_width, double tol) {
  if (!(radius > 0.0) || !(panel_width > 0.0) || !(tol > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "panel rule needs radius, width and tol > 0");
  }
  QuadratureRule rule;
  rule.tol = tol;
  rule.radius = radius;
  const int panels = static_cast<int>(std::ceil(2.0 * radius / panel_width));
  const double h = 2.0 * radius / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = -radius + p * h;
    const double b = (p + 1 == panels) ? radius : a + h;
    append_panel<10>(a, b, rule.nodes, rule.weights);
    append_panel<7>(a, b, rule.companion_nodes, rule.companion_weights);
  }
  double g = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    g += rule.weights[i] * std::exp(-rule.nodes[i] * rule.nodes[i]);
  }
  rule.est_error = std::abs(g - std::sqrt(std::numbers::pi));
  return rule;
}

QuadratureRule make_quadrature_rule(const QDeformation& qd, int j_max, int m, double tol) {
  if (!(tol > 0.0) || j_max < 0 || m < 0) {
    throw Error(ErrorKind::invalid_argument, "quadrature rule needs tol > 0, j_max >= 0, m >= 0");
  }
  const double k = qd.kappa();
  const double radius = std::max(8.0, std::sqrt(2.0 * std::log(1.0 / tol)) + 2.0 * k * j_max);
  const int freq = std::max(1, 2 * j_max + m);
  const double width = std::min(1.0, std::numbers::pi / (4.0 * k * freq));
  return make_panel_rule(radius, width, tol);
}

Complex integrate_real_line_fast(const std::function<Complex(double)>& g,
                                 const QuadratureRule& rule) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * g(rule.nodes[i]);
  return s;
}

SeriesValue integrate_real_line(const std::function<Complex(double)>& g,
                                const QuadratureRule& rule) {
  SeriesValue out;
  out.value = integrate_real_line_fast(g, rule);
  Complex c{0.0, 0.0};
  for (std::size_t i = 0; i < rule.companion_nodes.size(); ++i) {
    c += rule.companion_weights[i] * g(rule.companion_nodes[i]);
  }
  out.abs_error_estimate = std::abs(out.value - c) + rule.est_error;
  out.terms_used = static_cast<int>(rule.nodes.size());
  if (!std::isfinite(out.abs_error_estimate) ||
      out.abs_error_estimate > 100.0 * rule.tol * std::max(1.0, std::abs(out.value))) {
    throw Error(ErrorKind::quadrature_failure, "quadrature failure: companion rule disagrees");
  }
  return out;
}

SeriesValue bilinear_pairing(const AnalyticFunction& f, const AnalyticFunction& g,
                             const QuadratureRule& rule) {
  return integrate_real_line([&](double x) { return f(x) * g(x); }, rule);
}

SeriesValue sesquilinear_pairing(const AnalyticFunction& f, const AnalyticFunction& g,
                                 const QuadratureRule& rule) {
  return integrate_real_line([&](double x) { return f(x) * std::conj(g(x)); }, rule);
}

}  // namespace qcs
