#include "qcs/verify/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <tuple>

#include "qcs/cstates.hpp"
#include "qcs/kernels.hpp"
#include "qcs/oscillator.hpp"
#include "qcs/qpoly.hpp"
#include "qcs/transforms.hpp"
#include "suites_internal.hpp"

namespace qcs::verify {

namespace {

constexpr int kMaxM = 3;
constexpr int kMaxJ = 5;
// Rounding in the long products of (.;q)_inf at q = 0.999 reaches 1e-13.
constexpr double kFloor = 1e-11;

const std::array<Complex, 2> kZ{Complex{0.4, 0.3}, Complex{-0.7, 0.5}};
const std::array<Complex, 2> kW{Complex{-0.2, 0.6}, Complex{0.5, -0.1}};
const std::array<double, 3> kX{-1.1, 0.35, 1.6};
// s, alpha, beta for the Al-Salam-Chihara limit.
const std::array<std::array<Complex, 3>, 2> kAsc{{
    {Complex{0.3, 0.2}, Complex{0.25, -0.1}, Complex{-0.15, 0.2}},
    {Complex{-0.8, 0.4}, Complex{0.1, 0.3}, Complex{0.35, 0.05}},
}};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Complex hermite_function(int j, Complex x) {
  return hermite(j, x) * std::exp(-0.5 * x * x) /
         std::sqrt(std::sqrt(std::numbers::pi) * std::pow(2.0, j) * factorial(j));
}

AnalyticFunction hermite_fn(int j) {
  return AnalyticFunction([j](Complex x) { return hermite_function(j, x); });
}

/// tau^{-m} Q_m(tau s; 2 tau alpha, 2 tau beta|q), tau = sqrt((1-q)/(2 q^{m-1})).
Complex asc_scaled(int m, Complex s, Complex alpha, Complex beta, double q) {
  const double tau = std::sqrt((1.0 - q) / (2.0 * std::pow(q, m - 1)));
  const Complex x = tau * s;
  const Complex u = x + std::sqrt(x * x - 1.0);
  return al_salam_chihara(m, u, 2.0 * tau * alpha, 2.0 * tau * beta, q) / std::pow(tau, m);
}

using Key = std::tuple<std::string, int, int, int>;

struct Collector {
  std::vector<LimitSeries> order;
  std::map<Key, std::size_t> index;

  void put(const std::string& quantity, int m, int j, int point, int qi, double err,
           bool gated = true) {
    const Key k{quantity, m, j, point};
    auto it = index.find(k);
    if (it == index.end()) {
      it = index.emplace(k, order.size()).first;
      order.push_back({quantity, m, j, point, {}, gated});
    }
    order[it->second].error[qi] = err;
  }
};

Collector sweep_at(int qi, int m_top, int j_top) {
  const double q = kLimitQ[qi];
  const QDeformation qd = QDeformation::from_q(q);
  Collector c;
  for (int m = 0; m <= m_top; ++m) {
    for (int j = 0; j <= j_top; ++j) {
      for (int p = 0; p < 2; ++p) {
        const Complex z = kZ[p];
        const Complex h = complex_hermite(m, j, z, std::conj(z)) / std::sqrt(factorial(m) * factorial(j));
        // The limit holds for the q-Hermite form of the coefficients; the
        // Wall form is its complex conjugate.
        c.put("coefficient", m, j, p, qi, std::abs(coeff_phi_hermite(j, m, z, q) - h));
        c.put("coefficient-wall-form", m, j, p, qi, std::abs(coeff_phi(j, m, z, q) - h), false);
        // (1-q)^{-(m+j)/2} H_{m,j}(sqrt(1-q) z, sqrt(1-q) w|q) -> H_{m,j}(z, w).
        const double r = std::sqrt(1.0 - q);
        c.put("qhermite2d", m, j, p, qi,
              std::abs(qhermite2d(m, j, r * z, r * kW[p], q) / std::pow(r, m + j) -
                       complex_hermite(m, j, z, kW[p])));
      }
    }
    for (int p = 0; p < 2; ++p) {
      c.put("kernel", m, -1, p, qi,
            std::abs(kernel_qm_closed(kZ[p], kW[p], m, q) - kernel_classical(kZ[p], kW[p], m)));
      const auto& a = kAsc[p];
      c.put("al-salam-chihara", m, -1, p, qi,
            std::abs(asc_scaled(m, a[0], a[1], a[2], q) - hermite(m, a[0] - a[1] - a[2])));
    }
  }
  for (int j = 0; j <= j_top; ++j) {
    for (int p = 0; p < static_cast<int>(kX.size()); ++p) {
      c.put("rs-eigenfunction", -1, j, p, qi,
            std::abs(rs_eigenfunction(j, kX[p], qd) - hermite_function(j, kX[p])));
    }
    c.put("energy", -1, j, 0, qi, std::abs(energy(j, q) - (j + 0.5)));
  }
  const QuadratureRule rule = make_quadrature_rule(qd, 2 * kMaxJ, kMaxM);
  for (int p = 0; p < 2; ++p) {
    for (int j = 0; j <= j_top; ++j) {
      const AnalyticFunction f = hermite_fn(j);
      c.put("cst0", 0, j, p, qi,
            std::abs(cst0(f, kZ[p], qd, rule) - bargmann_classical(f, kZ[p], rule)));
    }
    for (int m = 0; m <= m_top; ++m) {
      const CstKernel kern(PhaseSpacePoint(kZ[p], m, qd), rule);
      for (int j = 0; j <= j_top; ++j) {
        const AnalyticFunction f = hermite_fn(j);
        const Complex v = kern.apply(f);
        c.put("cst", m, j, p, qi, std::abs(v - polyanalytic_bargmann(f, kZ[p], m, rule)));
        c.put("cst-half-shift", m, j, p, qi,
              std::abs(v - polyanalytic_bargmann(f, kZ[p], m, rule, HermiteShift::half)), false);
      }
    }
  }
  const Complex x{0.5, 0.2};
  c.put("qexp", -1, -1, 0, qi, std::abs(qexp(x, q).value - std::exp(x)));
  return c;
}

}  // namespace

std::vector<LimitSeries> limit_sweep(int m_max, int j_max) {
  const int m_top = std::min(kMaxM, m_max);
  const int j_top = std::min(kMaxJ, j_max);
  const auto per_q = parallel_map<Collector>(kLimitQ.size(), [&](std::size_t qi) {
    return sweep_at(static_cast<int>(qi), m_top, j_top);
  });
  std::vector<LimitSeries> out = per_q[0].order;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t qi = 1; qi < per_q.size(); ++qi) out[k].error[qi] = per_q[qi].order[k].error[qi];
  }
  return out;
}

double decrease_ratio(const LimitSeries& s) {
  double r = 0.0;
  for (std::size_t i = 1; i < s.error.size(); ++i) {
    const double a = s.error[i - 1];
    const double b = s.error[i];
    if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
    if (b <= kFloor && a <= kFloor) continue;
    r = std::max(r, a > 0.0 ? b / a : std::numeric_limits<double>::infinity());
  }
  return r;
}

SuiteReport suite_limits_q1(const RunSettings& s) {
  const std::vector<LimitSeries> series = limit_sweep(s.m_max, s.j_max);
  // One case per (quantity, m, j): the worst ratio over the test points.
  std::map<std::tuple<std::string, int, int>, std::size_t> slot;
  std::vector<std::pair<const LimitSeries*, double>> worst;
  for (const LimitSeries& e : series) {
    const auto key = std::make_tuple(e.quantity, e.m, e.j);
    const double r = decrease_ratio(e);
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, worst.size());
      worst.emplace_back(&e, r);
    } else if (std::isnan(r) || r > worst[it->second].second) {
      if (!std::isnan(worst[it->second].second)) worst[it->second] = {&e, r};
    }
  }
  SuiteReport rep;
  rep.suite = "limits-q1";
  const double tol = tol_or(s, 1.0);
  for (const auto& [e, r] : worst) {
    Json p;
    p["quantity"] = e->quantity;
    if (e->m >= 0) p["m"] = e->m;
    if (e->j >= 0) p["j"] = e->j;
    p["point"] = e->point;
    p["q"] = Json(kLimitQ);
    p["error"] = Json(e->error);
    if (e->gated) {
      rep.cases.push_back(make_case(p, r, tol));
    } else {
      rep.observations.push_back(
          {e->quantity, p, e->error.back(), "not expected to converge; value is the error at q = 0.999"});
    }
  }
  return rep;
}

}  // namespace qcs::verify
