#include <cmath>

#include "qcs/oscillator.hpp"
#include "suites_internal.hpp"

namespace qcs::verify {

namespace {

/// 20 real points in [-4, 4] and 10 complex ones with |Im x| <= 1.
std::vector<Complex> sample_points(SplitMix64& g) {
  std::vector<Complex> xs;
  for (int i = 0; i < 20; ++i) xs.emplace_back(g.uniform(-4.0, 4.0), 0.0);
  for (int i = 0; i < 10; ++i) xs.emplace_back(g.uniform(-3.0, 3.0), g.uniform(-1.0, 1.0));
  return xs;
}

/// (c0 + c1 x + c2 x^2) exp(-(x - a)^2/2 + i b x) with seeded coefficients.
std::vector<AnalyticFunction> test_functions(SplitMix64& g, int count) {
  std::vector<AnalyticFunction> fs;
  for (int i = 0; i < count; ++i) {
    const Complex c0 = g.complex_polar(0.2, 1.0);
    const Complex c1 = g.complex_polar(0.0, 1.0);
    const Complex c2 = g.complex_polar(0.0, 0.5);
    const double a = g.uniform(-1.0, 1.0);
    const double b = g.uniform(-1.0, 1.0);
    fs.emplace_back([=](Complex x) {
      return (c0 + c1 * x + c2 * x * x) * std::exp(-0.5 * (x - a) * (x - a) + Complex{0.0, b} * x);
    });
  }
  return fs;
}

Json point_json(Complex x) { return complex_json(x); }

}  // namespace

SuiteReport suite_rs_orthonormality(const RunSettings& s) {
  std::vector<Job> jobs;
  for (double q : s.q_list) {
    jobs.push_back([&s, q] {
      const QDeformation qd = QDeformation::from_q(q);
      const int n = s.j_max;
      const QuadratureRule rule = make_quadrature_rule(qd, n);
      std::vector<std::vector<Complex>> phi(rule.nodes.size());
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        phi[i] = rs_eigenfunction_sequence(n, rule.nodes[i], qd);
      }
      Worst sesq;
      Worst bil;
      for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
          Complex gs{0.0, 0.0};
          Complex gb{0.0, 0.0};
          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            gs += rule.weights[i] * phi[i][j] * std::conj(phi[i][k]);
            gb += rule.weights[i] * phi[i][j] * phi[i][k];
          }
          const double d = j == k ? 1.0 : 0.0;
          sesq.update(std::abs(gs - d), {{"j", j}, {"k", k}});
          bil.update(std::abs(gb - d), {{"j", j}, {"k", k}});
        }
      }
      Worst rec;
      for (double x : {-3.7, -1.2, 0.0, 0.4, 2.9}) {
        const std::vector<Complex> seq = rs_eigenfunction_sequence(n, Complex{x, 0.3}, qd);
        for (int j = 0; j <= n; ++j) {
          rec.update(rel_residual(rs_eigenfunction(j, Complex{x, 0.3}, qd), seq[j]),
                     {{"j", j}, {"x", complex_json(Complex{x, 0.3})}});
        }
      }
      Chunk c;
      c.cases.push_back(make_case({{"check", "sesquilinear-gram"}, {"q", q}, {"j_max", n},
                                   {"worst", sesq.params}},
                                  sesq.value, tol_or(s, 1e-8)));
      c.cases.push_back(make_case({{"check", "recurrence-vs-direct"}, {"q", q}, {"j_max", n},
                                   {"worst", rec.params}},
                                  rec.value, tol_or(s, 1e-12)));
      c.observations.push_back({"bilinear-gram", {{"q", q}, {"j_max", n}, {"worst", bil.params}},
                                bil.value,
                                "max |int phi_j phi_k - delta_jk| without conjugation"});
      return c;
    });
  }
  return assemble("rs-orthonormality", jobs);
}

SuiteReport suite_ladder(const RunSettings& s) {
  std::vector<Job> jobs;
  for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
    const double q = s.q_list[qi];
    jobs.push_back([&s, q, qi] {
      const QDeformation qd = QDeformation::from_q(q);
      SplitMix64 g = job_rng(s.seed, "ladder/points", qi);
      const std::vector<Complex> xs = sample_points(g);
      const int n = s.j_max;
      std::vector<AnalyticFunction> phi;
      for (int j = 0; j <= n + 1; ++j) phi.push_back(rs_function(j, qd));
      Worst up, down, ground, up_printed, down_printed;
      for (int j = 0; j <= n; ++j) {
        const double sq_up = std::sqrt(qnumber(j + 1, q));
        const double sq_dn = std::sqrt(qnumber(j, q));
        for (Complex x : xs) {
          const Json p = {{"j", j}, {"x", point_json(x)}};
          const Complex bs = apply_creation(phi[j], x, qd);
          const Complex b = apply_annihilation(phi[j], x, qd);
          const Complex next = phi[j + 1](x);
          const Complex prev = j > 0 ? phi[j - 1](x) : Complex{0.0, 0.0};
          up.update(rel_residual(bs, sq_up * next), p);
          up_printed.update(rel_residual(bs, next), p);
          if (j == 0) {
            ground.update(std::abs(b), p);
          } else {
            down.update(rel_residual(b, sq_dn * prev), p);
            down_printed.update(rel_residual(b, qnumber(j, q) * prev), p);
          }
        }
      }
      Worst iter, iter_printed;
      AnalyticFunction f = gaussian_ground_state();
      for (int j = 0; j <= 6; ++j) {
        if (j > 0) f = creation(f, qd);
        const double norm = std::sqrt(qfactorial(j, q));
        for (Complex x : xs) {
          const Json p = {{"j", j}, {"x", point_json(x)}};
          const Complex v = f(x);
          const Complex ref = rs_eigenfunction(j, x, qd);
          iter.update(rel_residual(v, norm * ref), p);
          iter_printed.update(rel_residual(v, ref), p);
        }
      }
      Chunk c;
      const auto add = [&](const char* check, const Worst& w, double tol) {
        c.cases.push_back(
            make_case({{"check", check}, {"q", q}, {"j_max", n}, {"worst", w.params}}, w.value,
                      tol_or(s, tol)));
      };
      add("creation-sqrt-qnumber", up, 1e-9);
      add("annihilation-sqrt-qnumber", down, 1e-9);
      add("annihilation-ground", ground, 1e-9);
      add("iterated-creation-sqrt-qfactorial", iter, 1e-8);
      c.observations.push_back({"creation-as-printed", {{"q", q}, {"worst", up_printed.params}},
                                up_printed.value, "B* phi_j - phi_{j+1}"});
      c.observations.push_back({"annihilation-as-printed", {{"q", q}, {"worst", down_printed.params}},
                                down_printed.value, "B phi_j - [j]_q phi_{j-1}"});
      c.observations.push_back({"iterated-creation-as-printed",
                                {{"q", q}, {"worst", iter_printed.params}}, iter_printed.value,
                                "(B*)^j phi_0 - phi_j, j <= 6"});
      return c;
    });
  }
  return assemble("ladder", jobs);
}

SuiteReport suite_hamiltonian(const RunSettings& s) {
  std::vector<Job> jobs;
  for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
    const double q = s.q_list[qi];
    jobs.push_back([&s, q, qi] {
      const QDeformation qd = QDeformation::from_q(q);
      SplitMix64 g = job_rng(s.seed, "hamiltonian/points", qi);
      const std::vector<Complex> xs = sample_points(g);
      const int n = s.j_max;
      Worst eig, eig_printed;
      std::vector<AnalyticFunction> fs;
      for (int j = 0; j <= n; ++j) {
        const AnalyticFunction phi = rs_function(j, qd);
        fs.push_back(phi);
        const double e = energy(j, q);
        for (Complex x : xs) {
          const Json p = {{"j", j}, {"x", point_json(x)}};
          const Complex ref = e * phi(x);
          eig.update(rel_residual(apply_hamiltonian(phi, x, qd), ref), p);
          eig_printed.update(rel_residual(apply_hamiltonian_plus_sign(phi, x, qd), ref), p);
        }
      }
      SplitMix64 gf = job_rng(s.seed, "hamiltonian/functions", qi);
      const std::vector<AnalyticFunction> extra = test_functions(gf, 5);
      fs.insert(fs.end(), extra.begin(), extra.end());
      Worst comp, comm;
      for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        const AnalyticFunction& f = fs[fi];
        const AnalyticFunction bs = creation(f, qd);
        const AnalyticFunction b = annihilation(f, qd);
        const AnalyticFunction bbs = annihilation(bs, qd);
        const AnalyticFunction bsb = creation(b, qd);
        for (Complex x : xs) {
          const Json p = {{"function", static_cast<int>(fi)}, {"x", point_json(x)}};
          const Complex v_bbs = bbs(x);
          const Complex v_bsb = bsb(x);
          comp.update(rel_residual(apply_hamiltonian(f, x, qd), 0.5 * (v_bbs + v_bsb)), p);
          comm.update(rel_residual(v_bbs - q * v_bsb, f(x)), p);
        }
      }
      Chunk c;
      const auto add = [&](const char* check, const Worst& w, double tol) {
        c.cases.push_back(
            make_case({{"check", check}, {"q", q}, {"j_max", n}, {"worst", w.params}}, w.value,
                      tol_or(s, tol)));
      };
      add("eigen-relation", eig, 1e-9);
      add("four-term-vs-composition", comp, 1e-10);
      add("q-commutator", comm, 1e-10);
      c.observations.push_back({"eigen-relation-printed-sign",
                                {{"q", q}, {"worst", eig_printed.params}}, eig_printed.value,
                                "+(q^{1/2} + q^{3/2}) on the double shift"});
      return c;
    });
  }
  return assemble("hamiltonian", jobs);
}

}  // namespace qcs::verify
