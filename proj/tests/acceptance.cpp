// Acceptance criteria 1-9. Runs the qcs binary given as argv[1], reads its
// JSON report and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct Output {
  std::string text;
  int code = -1;
};

Output capture(const std::string& cmd) {
  Output o;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return o;
  char buf[65536];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) o.text.append(buf, n);
  const int status = pclose(p);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string key_of(const Json& params) {
  for (const char* k : {"check", "identity", "quantity"}) {
    if (params.contains(k)) return params[k].get<std::string>();
  }
  return "";
}

std::string fmt(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", v);
  return b;
}

class Report {
 public:
  explicit Report(const Json& j) : j_(j) {}

  const Json& suite(const std::string& name) const {
    for (const Json& s : j_["suites"]) {
      if (s["suite"] == name) return s;
    }
    throw std::runtime_error("suite missing from report: " + name);
  }

  std::vector<Json> cases(const std::string& suite_name, const std::string& key,
                          const std::function<bool(const Json&)>& keep = {}) const {
    std::vector<Json> out;
    for (const Json& c : suite(suite_name)["cases"]) {
      if (!key.empty() && key_of(c["params"]) != key) continue;
      if (keep && !keep(c["params"])) continue;
      out.push_back(c);
    }
    return out;
  }

  std::vector<Json> observations(const std::string& suite_name, const std::string& name) const {
    std::vector<Json> out;
    for (const Json& o : suite(suite_name)["observations"]) {
      if (o["name"] == name) out.push_back(o);
    }
    return out;
  }

  const Json& raw() const { return j_; }

 private:
  const Json& j_;
};

// One sub-check of a criterion: the largest value against a bound.
struct Item {
  std::string label;
  double worst = 0.0;
  double bound = 0.0;
  std::size_t count = 0;
  bool inclusive = false;
  std::string extra;

  bool pass() const { return count > 0 && (inclusive ? worst <= bound : worst < bound); }
};

Item max_of(std::string label, const std::vector<Json>& rows, const char* field, double bound) {
  Item it;
  it.label = std::move(label);
  it.bound = bound;
  it.count = rows.size();
  for (const Json& r : rows) {
    const double v = r[field].is_number() ? r[field].get<double>() : 1e300;
    it.worst = std::max(it.worst, v);
  }
  return it;
}

class Criterion {
 public:
  Criterion(int n, std::string title) : n_(n), title_(std::move(title)) {}

  void add(Item it) { items_.push_back(std::move(it)); }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  void require(bool ok, std::string s) {
    if (!ok) failures_.push_back(std::move(s));
  }

  bool pass() const {
    return failures_.empty() &&
           std::all_of(items_.begin(), items_.end(), [](const Item& i) { return i.pass(); });
  }

  void print(std::ostream& out) const {
    out << "criterion " << n_ << ": " << (pass() ? "PASS" : "FAIL") << "  " << title_ << "\n";
    for (const Item& i : items_) {
      out << "    " << (i.pass() ? "ok  " : "FAIL") << " " << i.label << ": max " << fmt(i.worst)
          << (i.inclusive ? " <= " : " < ") << fmt(i.bound) << " over " << i.count << " rows";
      if (!i.extra.empty()) out << " (" << i.extra << ")";
      out << "\n";
    }
    for (const std::string& f : failures_) out << "    FAIL " << f << "\n";
    for (const std::string& s : notes_) out << "    note " << s << "\n";
  }

 private:
  int n_;
  std::string title_;
  std::vector<Item> items_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::set<double> q_values(const std::vector<Json>& rows) {
  std::set<double> qs;
  for (const Json& r : rows) qs.insert(r["params"]["q"].get<double>());
  return qs;
}

int max_int(const std::vector<Json>& rows, const char* field) {
  int m = -1;
  for (const Json& r : rows) {
    if (r["params"].contains(field)) m = std::max(m, r["params"][field].get<int>());
  }
  return m;
}

const std::set<double> kDeskQ{0.3, 0.5, 0.8};

Criterion criterion1(const Report& r) {
  Criterion c(1, "q-identities: max residual < 1e-11 over >= 200 seeded draws per identity");
  for (const char* id : {"id11", "id14", "id15", "id16", "binothe", "21ident", "heine", "wallreduce",
                         "wallreduce2"}) {
    const auto rows = r.cases("qidentities", id);
    Item it = max_of(id, rows, "residual", 1e-11);
    int draws = 1 << 30;
    for (const Json& row : rows) draws = std::min(draws, row["params"]["draws"].get<int>());
    it.extra = "min draws per q " + std::to_string(rows.empty() ? 0 : draws);
    c.require(!rows.empty() && draws >= 200, std::string(id) + ": fewer than 200 draws");
    c.add(it);
  }
  return c;
}

Criterion criterion2(const Report& r) {
  Criterion c(2, "Wall orthogonality within 1e-10 for s, n <= 6, tau = q^{m-j}, m-j <= 4");
  const auto rows = r.cases("wall-orthogonality", "");
  c.add(max_of("truncated sum vs closed form", rows, "residual", 1e-10));
  std::set<int> taus;
  bool sizes = true;
  for (const Json& row : rows) {
    taus.insert(row["params"]["tau_exponent"].get<int>());
    sizes = sizes && row["params"]["s_max"].get<int>() >= 6 && row["params"]["n_max"].get<int>() >= 6;
  }
  c.require(taus == std::set<int>{0, 1, 2, 3, 4}, "tau exponents 0..4 not all covered");
  c.require(sizes, "s, n range below 6");
  c.require(q_values(rows) == kDeskQ, "q grid is not {0.3, 0.5, 0.8}");
  return c;
}

Criterion criterion3(const Report& r) {
  Criterion c(3, "coefficient orthonormality < 1e-8 on the discrete measure, j, k <= 8, m <= 4");
  for (const char* k : {"gram-lattice", "gram-direct"}) {
    const auto rows = r.cases("coeff-orthonormality", k);
    c.add(max_of(k, rows, "residual", 1e-8));
    c.require(max_int(rows, "m") >= 4 && max_int(rows, "j_max") >= 8, std::string(k) + ": range");
    c.require(q_values(rows) == kDeskQ, std::string(k) + ": q grid");
  }
  return c;
}

Criterion criterion4(const Report& r) {
  Criterion c(4, "oscillator: relations as printed");
  c.add(max_of("bilinear orthonormality int phi_j phi_k", r.observations("rs-orthonormality", "bilinear-gram"),
               "value", 1e-8));
  c.add(max_of("ladder B* phi_j = phi_{j+1}", r.observations("ladder", "creation-as-printed"), "value", 1e-9));
  c.add(max_of("ladder B phi_j = [j]_q phi_{j-1}", r.observations("ladder", "annihilation-as-printed"),
               "value", 1e-9));
  c.add(max_of("Hamiltonian eigen-relation with eps_j", r.cases("hamiltonian", "eigen-relation"), "residual",
               1e-9));
  c.add(max_of("q-commutation on test functions", r.cases("hamiltonian", "q-commutator"), "residual", 1e-10));
  c.add(max_of("iterated creation (B*)^j phi_0 = phi_j, j <= 6",
               r.observations("ladder", "iterated-creation-as-printed"), "value", 1e-8));
  const auto worst = [&](const std::string& s, const std::string& k) {
    double w = 0.0;
    for (const Json& row : r.cases(s, k)) w = std::max(w, row["residual"].get<double>());
    return fmt(w);
  };
  double printed_sign = 0.0;
  for (const Json& o : r.observations("hamiltonian", "eigen-relation-printed-sign")) {
    printed_sign = std::max(printed_sign, o["value"].get<double>());
  }
  c.note("sesquilinear orthonormality: " + worst("rs-orthonormality", "sesquilinear-gram"));
  c.note("B* phi_j = sqrt([j+1]_q) phi_{j+1}: " + worst("ladder", "creation-sqrt-qnumber"));
  c.note("B phi_j = sqrt([j]_q) phi_{j-1}: " + worst("ladder", "annihilation-sqrt-qnumber"));
  c.note("(B*)^j phi_0 = sqrt([j]_q!) phi_j: " + worst("ladder", "iterated-creation-sqrt-qfactorial"));
  c.note("eigen-relation with the printed double-shift sign: " + fmt(printed_sign));
  return c;
}

Criterion criterion5(const Report& r) {
  Criterion c(5, "wave function: series vs closed form < 1e-9, m <= 3, >= 50 draws; m = 0 product form");
  const auto low_m = [](const Json& p) { return p["m"].get<int>() <= 3; };
  const auto rows = r.cases("wavefunction-closed-vs-series", "closed-vs-series", low_m);
  c.add(max_of("relative error series vs closed", rows, "residual", 1e-9));
  for (const Json& row : rows) {
    c.require(row["params"].value("draws", 0) >= 50, "fewer than 50 draws per (m, q)");
  }
  c.require(max_int(rows, "m") == 3 && q_values(rows) == kDeskQ, "(m, q) grid incomplete");
  c.add(max_of("m = 0 closed vs product form", r.cases("wavefunction-closed-vs-series", "m0-closed-vs-product-form"),
               "residual", 1e-13));
  return c;
}

Criterion criterion6(const Report& r) {
  Criterion c(6, "kernel: three forms < 1e-10, m <= 4; m = 0 is e_q; reproducing < 1e-7; Gram PSD");
  const auto a = r.cases("kernel-three-forms", "series-vs-closed");
  c.add(max_of("series vs closed", a, "residual", 1e-10));
  c.add(max_of("closed vs intermediate", r.cases("kernel-three-forms", "closed-vs-intermediate"), "residual",
               1e-10));
  c.require(max_int(a, "m") >= 4, "m range below 4");
  c.add(max_of("m = 0 vs e_q(z conj w)", r.cases("kernel-three-forms", "m0-equals-q-exponential"), "residual",
               1e-10));
  c.add(max_of("reproducing property", r.cases("reproducing", "fock-inner-basis-with-kernel"), "residual", 1e-7));
  Item psd = max_of("-(min Gram eigenvalue)", r.cases("kernel-three-forms", "gram-min-eigenvalue"), "residual",
                    1e-9);
  psd.inclusive = true;
  c.add(psd);
  return c;
}

Criterion criterion7(const Report& r) {
  Criterion c(7, "classical limits decrease monotonically over q = 0.9, 0.99, 0.999 (m <= 3, j <= 5)");
  for (const char* k : {"coefficient", "kernel", "rs-eigenfunction", "energy", "cst0", "cst"}) {
    const auto rows = r.cases("limits-q1", k, [](const Json& p) {
      return p.value("m", 0) <= 3 && p.value("j", 0) <= 5;
    });
    Item it = max_of(std::string(k) + " worst ratio of consecutive errors", rows, "residual", 1.0);
    for (const Json& row : rows) {
      if (row["residual"].get<double>() < 1.0) continue;
      const Json& p = row["params"];
      std::ostringstream s;
      s << k << " m=" << p.value("m", -1) << " j=" << p.value("j", -1) << " point " << p["point"]
        << " errors " << p["error"].dump();
      c.note("not monotone: " + s.str());
    }
    c.add(it);
  }
  return c;
}

Criterion criterion8(const Report& r) {
  Criterion c(8, "transforms: m = 0 vs cst0, basis mapping, Parseval on span{phi_0..phi_6}");
  const std::string s = "transform-isometry";
  c.add(max_of("cst at m = 0 vs cst0", r.cases(s, "m0-cst-vs-cst0"), "residual", 1e-10));
  c.add(max_of("coefficient recovery, conj(phi_j) -> Phi_j", r.cases(s, "basis-mapping-conjugate-to-phi"),
               "residual", 1e-7));
  c.add(max_of("Parseval on the measure", r.cases(s, "parseval-measure"), "residual", 1e-6));
  c.add(max_of("isometry of inner products", r.cases(s, "isometry-inner-product"), "residual", 1e-6));
  c.add(max_of("Parseval in coefficients", r.cases(s, "parseval-coefficients"), "residual", 1e-6));
  for (const char* o : {"basis-mapping-phi-to-phi", "basis-mapping-phi-to-conjugate"}) {
    double w = 0.0;
    for (const Json& row : r.observations(s, o)) w = std::max(w, row["value"].get<double>());
    c.note(std::string("rejected pairing ") + o + ": " + fmt(w));
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to qcs>\n";
    return 2;
  }
  const std::string cli = std::string("'") + argv[1] + "'";
  const Output first = capture(cli + " verify all --seed 7");
  const Output second = capture(cli + " verify all --seed 7");
  const Output timed = capture(cli + " verify all --seed 7 --timing");

  Json report, timing;
  try {
    report = Json::parse(first.text);
    timing = Json::parse(timed.text);
  } catch (const std::exception& e) {
    std::cout << "could not parse the verify report: " << e.what() << "\n";
    return 1;
  }
  const Report r(report);

  std::vector<Criterion> all;
  try {
    all.push_back(criterion1(r));
    all.push_back(criterion2(r));
    all.push_back(criterion3(r));
    all.push_back(criterion4(r));
    all.push_back(criterion5(r));
    all.push_back(criterion6(r));
    all.push_back(criterion7(r));
    all.push_back(criterion8(r));
  } catch (const std::exception& e) {
    std::cout << "malformed report: " << e.what() << "\n";
    return 1;
  }

  Criterion c9(9, "verify all --seed 7 is byte-identical across runs; exit 0 exactly when all suites pass");
  const int failed = report["summary"]["failed"].get<int>();
  c9.require(!first.text.empty() && first.text == second.text, "the two runs differ");
  c9.require(first.code == second.code, "exit codes differ");
  c9.require((first.code == 0) == (failed == 0),
             "exit code " + std::to_string(first.code) + " with " + std::to_string(failed) + " failed cases");
  c9.note("exit code " + std::to_string(first.code) + ", " + std::to_string(failed) + " failed cases, " +
          std::to_string(first.text.size()) + " bytes");
  all.push_back(c9);

  bool ok = true;
  for (const Criterion& c : all) {
    c.print(std::cout);
    ok = ok && c.pass();
  }

  long slowest = 0;
  std::string slowest_name;
  for (const Json& s : timing["suites"]) {
    const long ms = s["summary"]["wall_time_ms"].get<long>();
    if (ms > slowest) {
      slowest = ms;
      slowest_name = s["suite"].get<std::string>();
    }
  }
  const bool fast = slowest < 60000;
  std::cout << "suite time: " << (fast ? "PASS" : "FAIL") << "  slowest " << slowest_name << " " << slowest
            << " ms < 60000 ms\n";
  ok = ok && fast;

  int n_pass = 0;
  for (const Criterion& c : all) n_pass += c.pass() ? 1 : 0;
  std::cout << n_pass << " of " << all.size() << " criteria pass\n";
  return ok ? 0 : 1;
}
