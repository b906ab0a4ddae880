#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qcs/cstates.hpp"
#include "qcs/kernels.hpp"
#include "qcs/oscillator.hpp"
#include "suites_internal.hpp"

namespace qcs::verify {

namespace {

/// A point of C_{q,m} with sqrt((1-q)|z|^2/q^m) uniform in [lo, hi].
Complex random_in_domain(SplitMix64& g, int m, double q, double lo, double hi) {
  const double r = g.uniform(lo, hi) * std::pow(q, 0.5 * m) / std::sqrt(1.0 - q);
  return std::polar(r, g.uniform(-std::numbers::pi, std::numbers::pi));
}

double rho(Complex z, int m, double q) {
  return std::sqrt((1.0 - q) * std::norm(z) / std::pow(q, m));
}

/// Angular points on circle l so that harmonics decaying like rate^n are
/// resolved to 1e-13, plus room for frequencies up to extra.
FockGrid adaptive_grid(const RadialMeasure& meas, int m, double rate_z, int extra) {
  const double q = meas.q;
  return make_fock_grid(meas, [=](int l) {
    const double rate = rate_z * std::pow(q, 0.5 * std::abs(l - m));
    const int n = rate > 0.0 ? static_cast<int>(std::ceil(std::log(1e-13) / std::log(rate))) : 0;
    return 2 * (n + extra) + 5;
  });
}

}  // namespace

SuiteReport suite_coeff_orthonormality(const RunSettings& s) {
  std::vector<Job> jobs;
  for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
    const double q = s.q_list[qi];
    for (int m = 0; m <= s.m_max; ++m) {
      jobs.push_back([&s, q, qi, m] {
        const QDeformation qd = QDeformation::from_q(q);
        const int n = s.j_max;
        const RadialMeasure meas = measure(qd);
        const FockGrid grid = make_fock_grid(meas, n);
        const std::size_t np = grid.points.size();
        std::vector<std::vector<Complex>> lat(n + 1, std::vector<Complex>(np));
        std::vector<std::vector<Complex>> dir(n + 1, std::vector<Complex>(np));
        for (int j = 0; j <= n; ++j) {
          for (std::size_t i = 0; i < np; ++i) {
            const MeasurePoint& p = grid.points[i];
            lat[j][i] = coeff_phi_lattice(j, m, p.l, p.theta, q);
            dir[j][i] = coeff_phi(j, m, p.z, q);
          }
        }
        Worst wl, wd;
        for (int j = 0; j <= n; ++j) {
          for (int k = 0; k <= n; ++k) {
            const double d = j == k ? 1.0 : 0.0;
            const Json p = {{"j", j}, {"k", k}};
            wl.update(std::abs(grid_inner(lat[j], lat[k], grid) - d), p);
            wd.update(std::abs(grid_inner(dir[j], dir[k], grid) - d), p);
          }
        }
        SplitMix64 g = job_rng(s.seed, "coeff-orthonormality/points", qi * 64 + m);
        Worst wn, wh, wh_direct, w0;
        for (int t = 0; t < 10; ++t) {
          const Complex z = random_in_domain(g, m, q, 0.0, 0.9);
          double sum = 0.0;
          for (int j = 0; j < 100000; ++j) {
            const double a = std::norm(coeff_phi(j, m, z, q));
            sum += a;
            if (j > m + 2 && a < 1e-18 * sum) break;
          }
          const double nz = normalization(m, std::norm(z), q);
          wn.update(std::abs(sum - nz) / nz, {{"z", complex_json(z)}});
          for (int j = 0; j <= n; ++j) {
            const Json p = {{"j", j}, {"z", complex_json(z)}};
            const Complex c7 = coeff_phi(j, m, z, q);
            const Complex c12 = coeff_phi_hermite(j, m, z, q);
            wh.update(rel_residual(c12, std::conj(c7)), p);
            wh_direct.update(rel_residual(c12, c7), p);
            if (m == 0) {
              w0.update(rel_residual(c7, ipow(z, j) / std::sqrt(qfactorial(j, q))), p);
            }
          }
        }
        Chunk c;
        const auto add = [&](const char* check, const Worst& w, double tol) {
          c.cases.push_back(make_case(
              {{"check", check}, {"q", q}, {"m", m}, {"j_max", n}, {"worst", w.params}}, w.value,
              tol_or(s, tol)));
        };
        add("gram-lattice", wl, 1e-8);
        add("gram-direct", wd, 1e-8);
        add("normalization-sum", wn, 1e-9);
        add("hermite-form-equals-conjugate", wh, 1e-10);
        if (m == 0) add("m0-reduction", w0, 1e-12);
        c.observations.push_back({"hermite-form-unconjugated",
                                  {{"q", q}, {"m", m}, {"worst", wh_direct.params}},
                                  wh_direct.value,
                                  "max |Phi_j via H_{m,j} - Phi_j via Wall| without conjugation"});
        return c;
      });
    }
  }
  return assemble("coeff-orthonormality", jobs);
}

SuiteReport suite_wavefunction(const RunSettings& s) {
  static constexpr int kDraws = 50;
  std::vector<Job> jobs;
  for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
    const double q = s.q_list[qi];
    for (int m = 0; m <= s.m_max; ++m) {
      jobs.push_back([&s, q, qi, m] {
        const QDeformation qd = QDeformation::from_q(q);
        SplitMix64 g = job_rng(s.seed, "wavefunction/points", qi * 64 + m);
        Worst ws, wconj, w0;
        for (int t = 0; t < kDraws; ++t) {
          const Complex z = random_in_domain(g, m, q, 0.0, 0.85);
          const double xi = g.uniform(-4.0, 4.0);
          const PhaseSpacePoint p(z, m, qd);
          const Complex closed = cs_wavefunction_closed(p, xi);
          const Json par = {{"z", complex_json(z)}, {"xi", xi}};
          const Complex series = cs_wavefunction_series(p, xi).value;
          ws.update(std::abs(series - closed) / std::abs(closed), par);
          const Complex conj_series =
              cs_wavefunction_series(p, xi, CoefficientConvention::conjugate).value;
          wconj.update(std::abs(conj_series - closed) / std::abs(closed), par);
          if (m == 0) {
            w0.update(std::abs(cs_wavefunction_m0(z, xi, qd) - closed) / std::abs(closed), par);
          }
        }
        Worst wn, wb;
        for (int t = 0; t < 3; ++t) {
          const Complex z = random_in_domain(g, m, q, 0.0, 0.6);
          const PhaseSpacePoint p(z, m, qd);
          const double r = std::max(rho(z, m, q), 1e-3);
          const int big_j = std::min(400, static_cast<int>(std::ceil(std::log(1e-14) / std::log(r))));
          const QuadratureRule rule = make_panel_rule(
              10.0, std::numbers::pi / (4.0 * qd.kappa() * (2 * big_j + m + 1)));
          double nn = 0.0;
          Complex bb{0.0, 0.0};
          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const Complex v = cs_wavefunction_closed(p, rule.nodes[i]);
            nn += rule.weights[i] * std::norm(v);
            bb += rule.weights[i] * v * v;
          }
          wn.update(std::abs(nn - 1.0), {{"z", complex_json(z)}});
          wb.update(std::abs(bb - 1.0), {{"z", complex_json(z)}});
        }
        Chunk c;
        const auto add = [&](const char* check, const Worst& w, double tol) {
          c.cases.push_back(make_case({{"check", check}, {"q", q}, {"m", m}, {"worst", w.params}},
                                      w.value, tol_or(s, tol)));
        };
        const auto add_drawn = [&](const char* check, const Worst& w, double tol) {
          c.cases.push_back(make_case(
              {{"check", check}, {"q", q}, {"m", m}, {"draws", kDraws}, {"worst", w.params}},
              w.value, tol_or(s, tol)));
        };
        add_drawn("closed-vs-series", ws, 1e-9);
        if (m == 0) add_drawn("m0-closed-vs-product-form", w0, 1e-13);
        add("normalized-sesquilinear", wn, 1e-8);
        c.observations.push_back({"conjugate-coefficients", {{"q", q}, {"m", m}, {"worst", wconj.params}},
                                  wconj.value,
                                  "relative error of the series with conj(Phi_j) coefficients"});
        c.observations.push_back({"normalized-bilinear", {{"q", q}, {"m", m}, {"worst", wb.params}},
                                  wb.value, "|int Psi^2 - 1|"});
        return c;
      });
    }
  }
  return assemble("wavefunction-closed-vs-series", jobs);
}

SuiteReport suite_kernel_three_forms(const RunSettings& s) {
  std::vector<Job> jobs;
  for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
    const double q = s.q_list[qi];
    for (int m = 0; m <= s.m_max; ++m) {
      jobs.push_back([&s, q, qi, m] {
        SplitMix64 g = job_rng(s.seed, "kernel-three-forms/points", qi * 64 + m);
        Worst wsc, wci, weq, wdiag, wsym;
        for (int t = 0; t < 20; ++t) {
          const Complex z = random_in_domain(g, m, q, 0.05, 0.9);
          const Complex w = random_in_domain(g, m, q, 0.05, 0.9);
          const Json p = {{"z", complex_json(z)}, {"w", complex_json(w)}};
          const Complex closed = kernel_qm_closed(z, w, m, q);
          wsc.update(rel_residual(closed, kernel_qm_series(z, w, m, q).value), p);
          wci.update(rel_residual(closed, kernel_qm_intermediate(z, w, m, q)), p);
          wsym.update(rel_residual(closed, std::conj(kernel_qm_closed(w, z, m, q))), p);
          if (m == 0) weq.update(rel_residual(closed, arik_coon_kernel(z, w, q)), p);
          const double nz = normalization(m, std::norm(z), q);
          wdiag.update(std::abs(kernel_qm_closed(z, z, m, q) - nz) / nz, {{"z", complex_json(z)}});
        }
        Worst wpsd;
        for (int t = 0; t < 10; ++t) {
          Eigen::MatrixXcd gram(4, 4);
          std::vector<Complex> zs(4);
          Json pts = Json::array();
          for (auto& z : zs) {
            z = random_in_domain(g, m, q, 0.0, 0.9);
            pts.push_back(complex_json(z));
          }
          for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) gram(a, b) = kernel_qm(zs[a], zs[b], m, q);
          }
          const Eigen::MatrixXcd herm = 0.5 * (gram + gram.adjoint());
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
          wpsd.update(std::max(0.0, -es.eigenvalues().minCoeff()), {{"points", pts}});
        }
        Chunk c;
        const auto add = [&](const char* check, const Worst& w, double tol) {
          c.cases.push_back(make_case({{"check", check}, {"q", q}, {"m", m}, {"worst", w.params}},
                                      w.value, tol_or(s, tol)));
        };
        add("series-vs-closed", wsc, 1e-10);
        add("closed-vs-intermediate", wci, 1e-10);
        add("hermitian-symmetry", wsym, 1e-10);
        add("diagonal-equals-normalization", wdiag, 1e-9);
        if (m == 0) add("m0-equals-q-exponential", weq, 1e-10);
        add("gram-min-eigenvalue", wpsd, 1e-9);
        return c;
      });
    }
  }
  return assemble("kernel-three-forms", jobs);
}

SuiteReport suite_reproducing(const RunSettings& s) {
  std::vector<Job> jobs;
  const int j_top = std::min(6, s.j_max);
  for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
    const double q = s.q_list[qi];
    for (int m = 0; m <= s.m_max; ++m) {
      jobs.push_back([&s, q, qi, m, j_top] {
        const QDeformation qd = QDeformation::from_q(q);
        const RadialMeasure meas = measure(qd);
        SplitMix64 g = job_rng(s.seed, "reproducing/points", qi * 64 + m);
        Worst w;
        for (int t = 0; t < 2; ++t) {
          const Complex z = random_in_domain(g, m, q, 0.1, 0.7);
          const FockGrid grid = adaptive_grid(meas, m, rho(z, m, q), j_top);
          const std::size_t np = grid.points.size();
          // K(., z) on the grid: closed form inside C_{q,m}, lattice series outside.
          std::vector<Complex> kern(np);
          for (std::size_t i = 0; i < np; ++i) {
            const MeasurePoint& p = grid.points[i];
            kern[i] = p.l > m ? kernel_qm_closed(p.z, z, m, q)
                              : std::conj(kernel_qm_series(z, p, m, q).value);
          }
          for (int j = 0; j <= j_top; ++j) {
            std::vector<Complex> phi(np);
            for (std::size_t i = 0; i < np; ++i) {
              phi[i] = coeff_phi_lattice(j, m, grid.points[i].l, grid.points[i].theta, q);
            }
            const Complex v = grid_inner(phi, kern, grid);
            const Complex ref = coeff_phi(j, m, z, q);
            w.update(std::abs(v - ref), {{"j", j}, {"z", complex_json(z)}, {"grid_points", np}});
          }
        }
        Chunk c;
        c.cases.push_back(make_case({{"check", "fock-inner-basis-with-kernel"},
                                     {"q", q},
                                     {"m", m},
                                     {"j_max", j_top},
                                     {"worst", w.params}},
                                    w.value, tol_or(s, 1e-7)));
        return c;
      });
    }
  }
  return assemble("reproducing", jobs);
}

}  // namespace qcs::verify
