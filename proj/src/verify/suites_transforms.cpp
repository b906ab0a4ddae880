#include <cmath>
#include <numbers>

#include "qcs/cstates.hpp"
#include "qcs/oscillator.hpp"
#include "qcs/transforms.hpp"
#include "suites_internal.hpp"

namespace qcs::verify {

namespace {

constexpr int kSpan = 6;
constexpr int kCirclePoints = 64;

Complex at_rho(double r, double theta, int m, double q) {
  return std::polar(r * std::pow(q, 0.5 * m) / std::sqrt(1.0 - q), theta);
}

/// A rule fine enough for the transform at points with rho <= r.
QuadratureRule transform_rule(double r, int m, const QDeformation& qd) {
  const int big_j =
      r > 0.0 ? std::min(600, static_cast<int>(std::ceil(std::log(1e-14) / std::log(r)))) : 1;
  return make_panel_rule(9.0, std::numbers::pi / (qd.kappa() * (2 * big_j + m + 1)));
}

/// sum_k a_k phi_k at the nodes of a rule.
std::vector<Complex> combination(std::span<const Complex> a, const QuadratureRule& rule,
                                 const QDeformation& qd) {
  std::vector<Complex> v(rule.nodes.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::vector<Complex> phi = rs_eigenfunction_sequence(kSpan, rule.nodes[i], qd);
    Complex s{0.0, 0.0};
    for (int k = 0; k <= kSpan; ++k) s += a[k] * phi[k];
    v[i] = s;
  }
  return v;
}

Complex integral(std::span<const Complex> f, std::span<const Complex> g, const QuadratureRule& rule,
                 bool conjugate_g) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += rule.weights[i] * f[i] * (conjugate_g ? std::conj(g[i]) : g[i]);
  }
  return s;
}

}  // namespace

SuiteReport suite_transform_isometry(const RunSettings& s) {
  std::vector<Job> jobs;
  for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
    const double q = s.q_list[qi];
    for (int m = 0; m <= s.m_max; ++m) {
      jobs.push_back([&s, q, qi, m] {
        const QDeformation qd = QDeformation::from_q(q);
        const int n = s.j_max;
        SplitMix64 g = job_rng(s.seed, "transform-isometry/functions", qi * 64 + m);
        std::vector<Complex> af(kSpan + 1), ag(kSpan + 1);
        for (auto& a : af) a = g.complex_polar(0.0, 1.0);
        for (auto& a : ag) a = g.complex_polar(0.0, 1.0);
        const Complex alpha = g.complex_polar(0.5, 1.5);
        const Complex beta = g.complex_polar(0.5, 1.5);

        // Coefficients of the printed integral, c_j = int f phi_j, up to
        // the order where |c_j| rho^j is negligible for rho <= 0.8.
        const int big_j =
            static_cast<int>(std::ceil(std::log(1e-15) / std::log(0.8 * std::sqrt(q))));
        const QuadratureRule fine =
            make_panel_rule(10.0, std::numbers::pi / (4.0 * qd.kappa() * (2 * big_j + 1)));
        const std::vector<Complex> f_fine = combination(af, fine, qd);
        const std::vector<Complex> g_fine = combination(ag, fine, qd);
        const std::vector<Complex> cf = rs_coefficients(f_fine, fine, big_j, qd);
        const double ff = integral(f_fine, f_fine, fine, true).real();
        const Complex fg = integral(f_fine, g_fine, fine, true);
        // Sesquilinear coefficients <f, phi_j>, as those of the printed
        // integral applied to conj f.
        std::vector<Complex> f_conj(f_fine.size()), g_conj(g_fine.size());
        for (std::size_t i = 0; i < f_fine.size(); ++i) {
          f_conj[i] = std::conj(f_fine[i]);
          g_conj[i] = std::conj(g_fine[i]);
        }
        const int j_sesq = std::min(big_j, 3 * kSpan);
        std::vector<Complex> hf = rs_coefficients(f_conj, fine, j_sesq, qd);
        std::vector<Complex> hg = rs_coefficients(g_conj, fine, j_sesq, qd);
        double hf_tail = 0.0;
        for (int j = kSpan + 1; j <= j_sesq; ++j) {
          hf_tail = std::max({hf_tail, std::abs(hf[j]), std::abs(hg[j])});
        }
        hf.resize(kSpan + 1);
        hg.resize(kSpan + 1);

        // Transform values on a circle with rho = 0.3.
        const double r0 = 0.3;
        const QuadratureRule rule = transform_rule(r0, m, qd);
        std::vector<std::vector<Complex>> basis(n + 1), basis_conj(n + 1);
        for (int j = 0; j <= n; ++j) {
          basis[j] = sample(rs_function(j, qd), rule);
          basis_conj[j].resize(basis[j].size());
          for (std::size_t i = 0; i < basis[j].size(); ++i) basis_conj[j][i] = std::conj(basis[j][i]);
        }
        const std::vector<Complex> f_s = combination(af, rule, qd);
        const std::vector<Complex> g_s = combination(ag, rule, qd);
        std::vector<Complex> f_sc(f_s.size());
        for (std::size_t i = 0; i < f_s.size(); ++i) f_sc[i] = std::conj(f_s[i]);
        std::vector<Complex> lin(f_s.size());
        for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = alpha * f_s[i] + beta * g_s[i];

        const int k_top = n + m + 4;
        std::vector<double> radial(k_top + 1);
        const Complex z_axis = at_rho(r0, 0.0, m, q);
        for (int k = 0; k <= k_top; ++k) radial[k] = coeff_phi(k, m, z_axis, q).real();
        std::vector<std::vector<Complex>> rec_c(n + 1, std::vector<Complex>(k_top + 1));
        std::vector<std::vector<Complex>> rec_p(n + 1, std::vector<Complex>(k_top + 1));
        Worst w_cst0, w_series, w_lin, w_conj_target;
        for (int t = 0; t < kCirclePoints; ++t) {
          const double theta = 2.0 * std::numbers::pi * t / kCirclePoints;
          const Complex z = at_rho(r0, theta, m, q);
          const CstKernel kern(PhaseSpacePoint(z, m, qd), rule);
          for (int j = 0; j <= n; ++j) {
            const Complex bc = kern.apply(basis_conj[j]);
            const Complex bp = kern.apply(basis[j]);
            for (int k = 0; k <= k_top; ++k) {
              const Complex e = std::polar(1.0, -(k - m) * theta) / (radial[k] * kCirclePoints);
              rec_c[j][k] += bc * e;
              rec_p[j][k] += bp * e;
            }
            w_conj_target.update(std::abs(bp - std::conj(coeff_phi(j, m, z, q))),
                                 {{"j", j}, {"z", complex_json(z)}});
          }
          const Json p = {{"z", complex_json(z)}};
          const Complex bf = kern.apply(f_s);
          w_series.update(rel_residual(bf, cst_coefficient_series(cf, z, m, q)), p);
          w_series.update(rel_residual(kern.apply(f_sc), cst_coefficient_series(hf, z, m, q)),
                          {{"z", complex_json(z)}, {"function", "conj f"}});
          w_lin.update(rel_residual(kern.apply(lin), alpha * bf + beta * kern.apply(g_s)), p);
          if (m == 0) w_cst0.update(rel_residual(bf, cst0(AnalyticFunction([&](Complex x) {
                                                            const auto ph =
                                                                rs_eigenfunction_sequence(kSpan, x, qd);
                                                            Complex v{0.0, 0.0};
                                                            for (int k = 0; k <= kSpan; ++k) v += af[k] * ph[k];
                                                            return v;
                                                          }),
                                                          z, qd, rule)),
                                    p);
        }
        Worst w_rec, w_rec_plain;
        for (int j = 0; j <= n; ++j) {
          for (int k = 0; k <= k_top; ++k) {
            const double d = j == k ? 1.0 : 0.0;
            w_rec.update(std::abs(rec_c[j][k] - d), {{"j", j}, {"k", k}});
            w_rec_plain.update(std::abs(rec_p[j][k] - d), {{"j", j}, {"k", k}});
          }
        }

        // Points deeper in the domain, and the route through the wave function.
        const AnalyticFunction f_fn([af, qd](Complex x) {
          const auto ph = rs_eigenfunction_sequence(kSpan, x, qd);
          Complex v{0.0, 0.0};
          for (int k = 0; k <= kSpan; ++k) v += af[k] * ph[k];
          return v;
        });
        Worst w_wave;
        for (int t = 0; t < 4; ++t) {
          const double r = g.uniform(0.0, 0.8);
          const Complex z = at_rho(r, g.uniform(-std::numbers::pi, std::numbers::pi), m, q);
          const QuadratureRule rr = transform_rule(std::max(r, 0.3), m, qd);
          const PhaseSpacePoint p(z, m, qd);
          const Complex bf = cst(f_fn, p, rr);
          const Json par = {{"z", complex_json(z)}};
          w_series.update(rel_residual(bf, cst_coefficient_series(cf, z, m, q)), par);
          if (t < 2) w_wave.update(rel_residual(bf, cst_via_wavefunction(f_fn, p, rr)), par);
          if (m == 0) w_cst0.update(rel_residual(bf, cst0(f_fn, z, qd, rr)), par);
        }

        // Parseval over d mu_q: N |<f, Psi_z>|^2 = |B[conj f](z)|^2 with
        // B[conj f] = sum_j conj<f, phi_j> Phi_j. Outside C_{q,m} the
        // coefficients come from the lattice evaluation.
        const RadialMeasure meas = measure(qd);
        const FockGrid grid = make_fock_grid(meas, kSpan);
        std::vector<Complex> bf_grid(grid.points.size()), bg_grid(grid.points.size());
        for (std::size_t i = 0; i < grid.points.size(); ++i) {
          const MeasurePoint& p = grid.points[i];
          bf_grid[i] = cst_coefficient_series(hf, p, m, q);
          bg_grid[i] = cst_coefficient_series(hg, p, m, q);
        }
        const double parseval = std::abs(grid_inner(bf_grid, bf_grid, grid).real() - ff);
        // <B conj f, B conj g> = <conj f, conj g> = conj <f, g>.
        const double inner = std::abs(grid_inner(bf_grid, bg_grid, grid) - std::conj(fg));
        double hsum = 0.0;
        for (const Complex& c : hf) hsum += std::norm(c);
        const double coeff_parseval = std::abs(hsum - ff);
        double csum = 0.0;
        for (const Complex& c : cf) csum += std::norm(c);

        Chunk c;
        const Json base = {{"q", q}, {"m", m}};
        const auto add = [&](const char* check, double value, Json extra, double tol) {
          Json p = {{"check", check}, {"q", q}, {"m", m}};
          for (auto& [k, v] : extra.items()) p[k] = v;
          c.cases.push_back(make_case(std::move(p), value, tol_or(s, tol)));
        };
        add("basis-mapping-conjugate-to-phi", w_rec.value,
            {{"j_max", n}, {"rho", r0}, {"circle_points", kCirclePoints}, {"worst", w_rec.params}}, 1e-7);
        if (m == 0) add("m0-cst-vs-cst0", w_cst0.value, {{"worst", w_cst0.params}}, 1e-10);
        add("cst-vs-wavefunction-integral", w_wave.value, {{"worst", w_wave.params}}, 1e-10);
        add("cst-vs-coefficient-series", w_series.value, {{"worst", w_series.params}}, 1e-9);
        add("linearity", w_lin.value, {{"worst", w_lin.params}}, 1e-12);
        add("parseval-measure", parseval, {{"span", kSpan}, {"grid_points", grid.points.size()}},
            1e-6);
        add("isometry-inner-product", inner, {{"span", kSpan}, {"grid_points", grid.points.size()}},
            1e-6);
        add("parseval-coefficients", coeff_parseval, {{"span", kSpan}}, 1e-6);
        add("coefficients-outside-span", hf_tail, {{"span", kSpan}, {"j_max", j_sesq}}, 1e-12);
        c.observations.push_back({"basis-mapping-phi-to-phi", {{"q", q}, {"m", m}, {"worst", w_rec_plain.params}},
                                  w_rec_plain.value,
                                  "max |recovered coefficient of B phi_j - delta_jk|"});
        c.observations.push_back({"basis-mapping-phi-to-conjugate",
                                  {{"q", q}, {"m", m}, {"worst", w_conj_target.params}},
                                  w_conj_target.value, "max |B phi_j(z) - conj Phi_j(z)|"});
        c.observations.push_back({"printed-integral-parseval-on-span", base, std::abs(csum - ff),
                                  "|sum_j |int f phi_j|^2 - <f, f>| for f in span{phi_0..phi_6}"});
        return c;
      });
    }
  }
  return assemble("transform-isometry", jobs);
}

}  // namespace qcs::verify
