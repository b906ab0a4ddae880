#include <array>
#include <cmath>

#include "qcs/qpoly.hpp"
#include "qcs/qseries.hpp"
#include "suites_internal.hpp"

namespace qcs::verify {

namespace {

constexpr int kDraws = 200;
constexpr int kDeg = 6;

using Draw = std::function<double(SplitMix64&, double, Json&)>;

struct Identity {
  const char* name;
  double tol;
  Draw draw;
};

double binom2(int n) { return 0.5 * n * (n - 1); }

std::vector<Identity> identities() {
  std::vector<Identity> ids;
  ids.push_back({"id14", 1e-13, [](SplitMix64& g, double q, Json& p) {
                   const Complex a = g.complex_polar(0.1, 2.0);
                   const int n = g.uniform_int(0, 12);
                   const int k = g.uniform_int(0, 12);
                   p = {{"a", complex_json(a)}, {"n", n}, {"k", k}};
                   return rel_residual(qpoch(a, q, n + k),
                                       qpoch(a, q, n) * qpoch(a * std::pow(q, n), q, k));
                 }});
  ids.push_back({"id15", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const Complex a = g.complex_polar(0.1, 2.0);
                   const int n = g.uniform_int(0, 12);
                   p = {{"a", complex_json(a)}, {"n", n}};
                   const Complex rhs = qpoch(std::pow(q, 1 - n) / a, q, n) * ipow(-a, n) *
                                       std::pow(q, binom2(n));
                   return rel_residual(qpoch(a, q, n), rhs);
                 }});
  ids.push_back({"id11", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const Complex a = g.complex_polar(0.1, 2.0);
                   const int s = g.uniform_int(0, 20);
                   p = {{"a", complex_json(a)}, {"s", s}};
                   return rel_residual(qpoch_inf(a, q),
                                       qpoch(a, q, s) * qpoch_inf(a * std::pow(q, s), q));
                 }});
  ids.push_back({"id16", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const Complex a = g.complex_polar(0.1, 2.0);
                   const int n = g.uniform_int(0, 8);
                   const int k = g.uniform_int(0, 8);
                   p = {{"a", complex_json(a)}, {"n", n}, {"k", k}};
                   const Complex rhs = qpoch(q / a, q, n) / qpoch(std::pow(q, 1 - k) / a, q, n) *
                                       qpoch(a, q, k) * std::pow(q, -n * k);
                   return rel_residual(qpoch(a * std::pow(q, -n), q, k), rhs);
                 }});
  ids.push_back({"binothe", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const Complex a = g.complex_polar(0.1, 2.0);
                   const Complex xi = g.complex_polar(0.0, 0.9);
                   p = {{"a", complex_json(a)}, {"xi", complex_json(xi)}};
                   const std::array<Complex, 1> up{a};
                   const Complex lhs = basic_hypergeometric(up, {}, q, xi).value;
                   return rel_residual(lhs, qpoch_inf(a * xi, q) / qpoch_inf(xi, q));
                 }});
  ids.push_back({"21ident", 1e-11, [](SplitMix64& g, double q, Json& p) {
                   const int n = g.uniform_int(0, 8);
                   const Complex b = g.complex_polar(0.1, 2.0);
                   const Complex c = g.complex_polar(0.1, 2.0);
                   p = {{"n", n}, {"b", complex_json(b)}, {"c", complex_json(c)}};
                   const Complex rhs = qpoch(c / b, q, n) / qpoch(c, q, n) * ipow(b, n);
                   return rel_residual(phi21_terminating(n, b, c, q, q), rhs);
                 }});
  ids.push_back({"heine", 1e-11, [](SplitMix64& g, double q, Json& p) {
                   const int n = g.uniform_int(0, 6);
                   const Complex xi = g.complex_polar(0.1, 2.0);
                   const Complex beta = g.complex_polar(0.1, 2.0);
                   const Complex gamma = g.complex_polar(0.1, 2.0);
                   const Complex tau = g.complex_polar(0.1, 2.0);
                   p = {{"n", n},
                        {"xi", complex_json(xi)},
                        {"beta", complex_json(beta)},
                        {"gamma", complex_json(gamma)},
                        {"tau", complex_json(tau)}};
                   const double qn = std::pow(q, n);
                   const Complex lhs =
                       phi32_terminating(n, xi, beta, gamma, q / (qn * tau), q, q);
                   const Complex rhs = qpoch(xi * tau, q, n) / qpoch(tau, q, n) *
                                       phi32_terminating(n, gamma / beta, xi, gamma, xi * tau, q,
                                                         beta * tau * qn);
                   return rel_residual(lhs, rhs);
                 }});
  ids.push_back({"wallreduce", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const int n = g.uniform_int(0, 8);
                   const Complex x = g.complex_polar(0.1, 2.0);
                   const Complex a = g.complex_polar(0.1, 2.0);
                   p = {{"n", n}, {"x", complex_json(x)}, {"a", complex_json(a)}};
                   const double qn = std::pow(q, n);
                   const Complex rhs = qpoch(1.0 / x, q, n) / qpoch(a * q, q, n) * ipow(-x, n) *
                                       std::pow(q, -binom2(n)) *
                                       phi21_terminating(n, 0.0, x * q / qn, q, a * qn * q);
                   return rel_residual(wall(n, x, a, q), rhs);
                 }});
  ids.push_back({"wallreduce2", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const int n = g.uniform_int(0, 8);
                   const Complex x = g.complex_polar(0.1, 2.0);
                   const Complex a = g.complex_polar(0.1, 2.0);
                   p = {{"n", n}, {"x", complex_json(x)}, {"a", complex_json(a)}};
                   return rel_residual(wall(n, x, a, q), wall_reduced(n, x, a, q));
                 }});
  // P_n(x;q^{-N}) has a pole at a = q^{-N}; both sides are multiplied by (aq;q)_n.
  ids.push_back({"wall-negative-power", 1e-11, [](SplitMix64& g, double q, Json& p) {
                   const int n = g.uniform_int(0, 8);
                   const int big_n = g.uniform_int(0, n);
                   const Complex x = g.complex_polar(0.1, 2.0);
                   p = {{"n", n}, {"N", big_n}, {"x", complex_json(x)}};
                   const double a = std::pow(q, -big_n);
                   Complex lhs{0.0, 0.0};
                   for (int k = 0; k <= n; ++k) {
                     lhs += qpoch(std::pow(q, -n), q, k) * qpoch(a * std::pow(q, k + 1), q, n - k) *
                            ipow(q * x, k) * qcoeff_recip(k, q);
                   }
                   const Complex rhs = ipow(-x, big_n) *
                                       std::pow(q, 0.5 * big_n * (big_n + 1 - 2 * n)) *
                                       qpoch(std::pow(q, big_n + 1), q, n - big_n) *
                                       wall(n - big_n, x, std::pow(q, big_n), q);
                   return rel_residual(lhs, rhs);
                 }});
  ids.push_back({"rsgf", 1e-10, [](SplitMix64& g, double q, Json& p) {
                   const Complex x = g.complex_polar(0.1, 1.0);
                   const Complex t = g.complex_polar(0.0, 0.5);
                   p = {{"x", complex_json(x)}, {"t", complex_json(t)}};
                   Complex sum{0.0, 0.0};
                   Complex tj{1.0, 0.0};
                   for (int j = 0; j < 4000; ++j) {
                     const Complex term = rogers_szego(j, x, q) * qcoeff_recip(j, q) * tj;
                     sum += term;
                     if (j > 10 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
                     tj *= t;
                   }
                   const Complex rhs =
                       1.0 / (qpoch_inf(t, q) * qpoch_inf(x * t / std::sqrt(q), q));
                   return rel_residual(sum, rhs);
                 }});
  ids.push_back({"stieltjes-wigert-connection", 1e-11, [](SplitMix64& g, double q, Json& p) {
                   const int n = g.uniform_int(0, 10);
                   const Complex x = g.complex_polar(0.1, 2.0);
                   p = {{"n", n}, {"x", complex_json(x)}};
                   return rel_residual(stieltjes_wigert_inverse_base(n, x, q),
                                       rogers_szego(n, x * std::pow(q, 0.5 - n), q));
                 }});
  ids.push_back({"al-salam-chihara-symmetry", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const int m = g.uniform_int(0, 6);
                   const Complex u = g.complex_polar(0.5, 2.0);
                   const Complex al = g.complex_polar(0.1, 2.0);
                   const Complex be = g.complex_polar(0.1, 2.0);
                   p = {{"m", m}, {"u", complex_json(u)}, {"alpha", complex_json(al)},
                        {"beta", complex_json(be)}};
                   return rel_residual(al_salam_chihara(m, u, al, be, q),
                                       al_salam_chihara(m, 1.0 / u, al, be, q));
                 }});
  ids.push_back({"al-salam-chihara-forms", 1e-11, [](SplitMix64& g, double q, Json& p) {
                   const int m = g.uniform_int(0, 6);
                   const Complex u = g.complex_polar(0.5, 2.0);
                   const Complex al = g.complex_polar(0.1, 2.0);
                   const Complex be = g.complex_polar(0.1, 2.0);
                   p = {{"m", m}, {"u", complex_json(u)}, {"alpha", complex_json(al)},
                        {"beta", complex_json(be)}};
                   return rel_residual(al_salam_chihara(m, u, al, be, q),
                                       al_salam_chihara_hypergeometric(m, u, al, be, q));
                 }});
  ids.push_back({"qexp-product", 1e-12, [](SplitMix64& g, double q, Json& p) {
                   const Complex x = g.complex_polar(0.0, 0.9 / (1.0 - q));
                   p = {{"x", complex_json(x)}};
                   return rel_residual(qexp(x, q).value, 1.0 / qpoch_inf((1.0 - q) * x, q));
                 }});
  return ids;
}

}  // namespace

SuiteReport suite_qidentities(const RunSettings& s) {
  const std::vector<Identity> ids = identities();
  std::vector<Job> jobs;
  for (const Identity& id : ids) {
    for (std::size_t qi = 0; qi < s.q_list.size(); ++qi) {
      const double q = s.q_list[qi];
      jobs.push_back([&s, &id, q, qi] {
        SplitMix64 g = job_rng(s.seed, std::string("qidentities/") + id.name, qi);
        Worst w;
        for (int d = 0; d < kDraws; ++d) {
          Json p;
          const double r = id.draw(g, q, p);
          p["draw"] = d;
          w.update(r, p);
        }
        Chunk c;
        c.cases.push_back(make_case(
            {{"identity", id.name}, {"q", q}, {"draws", kDraws}, {"worst", w.params}}, w.value,
            tol_or(s, id.tol)));
        return c;
      });
    }
  }
  return assemble("qidentities", jobs);
}

SuiteReport suite_wall_orthogonality(const RunSettings& s) {

  std::vector<Job> jobs;
  for (double q : s.q_list) {
    for (int d = 0; d <= s.m_max; ++d) {
      jobs.push_back([&s, q, d] {
        const double tau = std::pow(q, d);
        const double tq = tau * q;
        const double qq_inf = std::exp(log_qpochhammer_inf(q, q));
        // Sum_l (tau q)^l/(q;q)_l P_s(q^l) P_n(q^l) as a (kDeg+1)^2 matrix.
        std::vector<Complex> gram((kDeg + 1) * (kDeg + 1), Complex{0.0, 0.0});
        double wl = 1.0;
        for (int l = 0; l < 100000; ++l) {
          const double x = std::pow(q, l);
          std::vector<Complex> p(kDeg + 1);
          double pmax = 1.0;
          for (int n = 0; n <= kDeg; ++n) {
            p[n] = wall(n, x, tau, q);
            pmax = std::max(pmax, std::abs(p[n]));
          }
          for (int a = 0; a <= kDeg; ++a) {
            for (int b = 0; b <= kDeg; ++b) gram[a * (kDeg + 1) + b] += wl * p[a] * p[b];
          }
          // P_n(q^l) -> 1 as l grows; bound the rest by a geometric tail.
          const double next = wl * tq / (1.0 - std::pow(q, l + 1));
          if (l > 5 && 4.0 * pmax * pmax * next / (qq_inf * (1.0 - tq)) < 1e-16) break;
          wl = next;
        }
        Worst w;
        for (int a = 0; a <= kDeg; ++a) {
          for (int b = 0; b <= kDeg; ++b) {
            const double rhs = a == b ? std::pow(tq, b) / std::exp(log_qpochhammer_inf(tq, q)) *
                                            qpoch(q, q, b).real() / qpoch(tq, q, b).real()
                                      : 0.0;
            w.update(std::abs(gram[a * (kDeg + 1) + b] - rhs), {{"s", a}, {"n", b}});
          }
        }
        Chunk c;
        c.cases.push_back(make_case({{"q", q}, {"tau_exponent", d}, {"s_max", kDeg}, {"n_max", kDeg},
                                     {"worst", w.params}},
                                    w.value, tol_or(s, 1e-10)));
        return c;
      });
    }
  }
  return assemble("wall-orthogonality", jobs);
}

}  // namespace qcs::verify
