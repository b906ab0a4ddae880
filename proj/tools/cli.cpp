#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qcs/cstates.hpp"
#include "qcs/kernels.hpp"
#include "qcs/oscillator.hpp"
#include "qcs/qpoly.hpp"
#include "qcs/verify/suites.hpp"
#include "qcs/verify/tables.hpp"

namespace qcs::cli {

namespace {

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

enum class Kind { integer, real, complex };

struct Param {
  std::string name;
  Kind kind;
};

class Args {
 public:
  void set(const std::string& k, Complex v) { v_[k] = v; }
  int i(const std::string& k) const { return static_cast<int>(v_.at(k).real()); }
  double r(const std::string& k) const { return v_.at(k).real(); }
  Complex c(const std::string& k) const { return v_.at(k); }
  double q() const { return r("q"); }

 private:
  std::map<std::string, Complex> v_;
};

struct EvalFn {
  std::string name;
  std::vector<Param> params;
  std::function<SeriesValue(const Args&)> fn;
};

SeriesValue exact(Complex v) {
  SeriesValue s;
  s.value = v;
  return s;
}

Param pI(const char* n) { return {n, Kind::integer}; }
Param pR(const char* n) { return {n, Kind::real}; }
Param pC(const char* n) { return {n, Kind::complex}; }

const std::vector<EvalFn>& registry() {
  using A = const Args&;
  static const std::vector<EvalFn> r{
      {"qexp", {pC("xi"), pR("q")}, [](A a) { return qexp(a.c("xi"), a.q()); }},
      {"qpoch", {pC("a"), pR("q"), pI("n")},
       [](A a) { return qpochhammer(a.c("a"), a.q(), a.i("n")); }},
      {"qpoch_inf", {pC("a"), pR("q")},
       [](A a) { return qpochhammer(a.c("a"), a.q(), infinity); }},
      {"qnumber", {pI("n"), pR("q")}, [](A a) { return exact(qnumber(a.i("n"), a.q())); }},
      {"qfactorial", {pI("n"), pR("q")}, [](A a) { return exact(qfactorial(a.i("n"), a.q())); }},
      {"qbinomial", {pI("n"), pI("k"), pR("q")},
       [](A a) { return exact(qbinomial(a.i("n"), a.i("k"), a.q())); }},
      {"wall", {pI("n"), pC("x"), pC("a"), pR("q")},
       [](A a) { return exact(wall(a.i("n"), a.c("x"), a.c("a"), a.q())); }},
      {"wall_reduced", {pI("n"), pC("x"), pC("a"), pR("q")},
       [](A a) { return exact(wall_reduced(a.i("n"), a.c("x"), a.c("a"), a.q())); }},
      {"rogers_szego", {pI("n"), pC("xi"), pR("q")},
       [](A a) { return exact(rogers_szego(a.i("n"), a.c("xi"), a.q())); }},
      {"stieltjes_wigert", {pI("n"), pC("x"), pR("q")},
       [](A a) { return exact(stieltjes_wigert(a.i("n"), a.c("x"), a.q())); }},
      {"al_salam_chihara", {pI("m"), pC("u"), pC("alpha"), pC("beta"), pR("q")},
       [](A a) {
         return exact(al_salam_chihara(a.i("m"), a.c("u"), a.c("alpha"), a.c("beta"), a.q()));
       }},
      {"qhermite2d", {pI("m"), pI("j"), pC("z"), pC("zeta"), pR("q")},
       [](A a) { return exact(qhermite2d(a.i("m"), a.i("j"), a.c("z"), a.c("zeta"), a.q())); }},
      {"hermite", {pI("n"), pC("x")}, [](A a) { return exact(hermite(a.i("n"), a.c("x"))); }},
      {"laguerre0", {pI("m"), pC("x")}, [](A a) { return exact(laguerre0(a.i("m"), a.c("x"))); }},
      {"complex_hermite", {pI("m"), pI("j"), pC("z"), pC("zeta")},
       [](A a) { return exact(complex_hermite(a.i("m"), a.i("j"), a.c("z"), a.c("zeta"))); }},
      {"rs_eigenfunction", {pI("j"), pC("x"), pR("q")},
       [](A a) {
         return exact(rs_eigenfunction(a.i("j"), a.c("x"), QDeformation::from_q(a.q())));
       }},
      {"energy", {pI("j"), pR("q")}, [](A a) { return exact(energy(a.i("j"), a.q())); }},
      {"coeff_phi", {pI("j"), pI("m"), pC("z"), pR("q")},
       [](A a) { return exact(coeff_phi(a.i("j"), a.i("m"), a.c("z"), a.q())); }},
      {"coeff_phi_hermite", {pI("j"), pI("m"), pC("z"), pR("q")},
       [](A a) { return exact(coeff_phi_hermite(a.i("j"), a.i("m"), a.c("z"), a.q())); }},
      {"normalization", {pI("m"), pR("x"), pR("q")},
       [](A a) { return exact(normalization(a.i("m"), a.r("x"), a.q())); }},
      {"cs_wavefunction", {pC("z"), pI("m"), pR("xi"), pR("q")},
       [](A a) {
         const PhaseSpacePoint p(a.c("z"), a.i("m"), QDeformation::from_q(a.q()));
         return exact(cs_wavefunction_closed(p, a.r("xi")));
       }},
      {"cs_wavefunction_series", {pC("z"), pI("m"), pR("xi"), pR("q")},
       [](A a) {
         const PhaseSpacePoint p(a.c("z"), a.i("m"), QDeformation::from_q(a.q()));
         return cs_wavefunction_series(p, a.r("xi"));
       }},
      {"kernel_qm_closed", {pC("z"), pC("w"), pI("m"), pR("q")},
       [](A a) { return exact(kernel_qm_closed(a.c("z"), a.c("w"), a.i("m"), a.q())); }},
      {"kernel_qm_intermediate", {pC("z"), pC("w"), pI("m"), pR("q")},
       [](A a) { return exact(kernel_qm_intermediate(a.c("z"), a.c("w"), a.i("m"), a.q())); }},
      {"kernel_qm_series", {pC("z"), pC("w"), pI("m"), pR("q")},
       [](A a) { return kernel_qm_series(a.c("z"), a.c("w"), a.i("m"), a.q()); }},
      {"kernel_classical", {pC("z"), pC("w"), pI("m")},
       [](A a) { return exact(kernel_classical(a.c("z"), a.c("w"), a.i("m"))); }},
      {"arik_coon_kernel", {pC("z"), pC("w"), pR("q")},
       [](A a) { return exact(arik_coon_kernel(a.c("z"), a.c("w"), a.q())); }},
  };
  return r;
}

const std::vector<std::string>& all_param_names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v;
    for (const EvalFn& f : registry()) {
      for (const Param& p : f.params) {
        if (std::find(v.begin(), v.end(), p.name) == v.end()) v.push_back(p.name);
      }
    }
    return v;
  }();
  return n;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_eval(const std::string& name, const std::map<std::string, std::string>& given,
             std::ostream& out) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const EvalFn& f) { return f.name == name; });
  if (it == reg.end()) throw UsageError("unknown function: " + name);
  Args args;
  for (const Param& p : it->params) {
    const auto g = given.find(p.name);
    if (g == given.end()) throw UsageError(name + " needs --" + p.name);
    const std::optional<Complex> v = parse_complex(g->second);
    if (!v) throw UsageError("--" + p.name + ": not a number: " + g->second);
    if (p.kind != Kind::complex && v->imag() != 0.0) {
      throw UsageError("--" + p.name + " must be real");
    }
    if (p.kind == Kind::integer &&
        (v->real() != std::floor(v->real()) || std::abs(v->real()) > 1e9)) {
      throw UsageError("--" + p.name + " must be an integer");
    }
    args.set(p.name, *v);
  }
  for (const auto& [k, v] : given) {
    const bool used = std::any_of(it->params.begin(), it->params.end(),
                                  [&](const Param& p) { return p.name == k; });
    if (!used) throw UsageError(name + " does not take --" + k);
  }
  const SeriesValue v = it->fn(args);
  out << "value: " << format_value(v.value) << "\n";
  out << "abs_error_estimate: " << format_real(v.abs_error_estimate) << "\n";
  return kExitOk;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) throw UsageError("cannot write " + path);
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  if (const auto comma = s.find(','); comma != std::string::npos) {
    const auto re = parse_real(trim(s.substr(0, comma)));
    const auto im = parse_real(trim(s.substr(comma + 1)));
    if (!re || !im) return std::nullopt;
    return Complex{*re, *im};
  }
  if (s.back() != 'i') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  const auto im = parse_real(im_part);
  if (!im) return std::nullopt;
  double re = 0.0;
  if (!re_part.empty()) {
    const auto r = parse_real(re_part);
    if (!r) return std::nullopt;
    re = *r;
  }
  return Complex{re, *im};
}

std::optional<std::vector<double>> parse_real_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_real(trim(item));
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string format_value(Complex v) {
  if (v.imag() == 0.0) return format_real(v.real());
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", v.real() == 0.0 ? 0.0 : v.real(), v.imag());
  return buf;
}

std::vector<std::string> eval_names() {
  std::vector<std::string> n;
  for (const EvalFn& f : registry()) n.push_back(f.name);
  return n;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized q-coherent states: evaluation, verification suites and tables", "qcs"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate one function and print its value");
  std::string fn_name;
  eval->add_option("function", fn_name, "Function name (see `qcs list`)")->required();
  std::map<std::string, std::string> given;
  for (const std::string& p : all_param_names()) {
    eval->add_option_function<std::string>(
        "--" + p, [&given, p](const std::string& v) { given[p] = v; }, "Parameter " + p);
  }

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::string suite;
  std::string q_list;
  verify::RunSettings settings;
  std::optional<double> tol;
  bool timing = false;
  std::string verify_out;
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--q", q_list, "Comma-separated q values (default 0.3,0.5,0.8)");
  verify->add_option("--m-max,--m", settings.m_max, "Largest m")->check(CLI::Range(0, 12));
  verify->add_option("--j-max,--j", settings.j_max, "Largest j")->check(CLI::Range(0, 40));
  verify->add_option("--tol", tol, "Override every tolerance");
  verify->add_option("--seed", settings.seed, "PRNG seed");
  verify->add_flag("--timing", timing, "Report wall_time_ms (output is then not byte-stable)");
  verify->add_option("--output,-o", verify_out, "Write the report here instead of stdout");

  auto* table = app.add_subcommand("table", "Write a CSV table");
  std::string quantity;
  verify::TableSpec spec;
  std::string table_out;
  table->add_option("quantity", quantity, "kernel, limits-q1 or energies")->required();
  table->add_option("--q", spec.q, "q");
  table->add_option("--m", spec.m, "m")->check(CLI::Range(0, 12));
  table->add_option("--j-max,--j", spec.j_max, "Largest j")->check(CLI::Range(0, 200));
  table->add_option("--output,-o", table_out, "Write the CSV here instead of stdout");

  auto* list = app.add_subcommand("list", "List functions, suites and tables");

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(fn_name, given, out);
    if (*verify) {
      if (suite != "all" && !verify::is_suite(suite)) throw UsageError("unknown suite: " + suite);
      if (!q_list.empty()) {
        const auto qs = parse_real_list(q_list);
        if (!qs) throw UsageError("--q: expected comma-separated numbers");
        for (double q : *qs) {
          if (!(q > 0.0 && q < 1.0)) throw UsageError("--q: every q must lie in (0, 1)");
        }
        settings.q_list = *qs;
      }
      settings.tol = tol;
      const auto reports = verify::run_suites(suite, settings);
      write_output(verify::render(verify::to_json(reports, suite, settings, timing)), verify_out,
                   out);
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const verify::SuiteReport& r) { return r.failed() == 0; });
      return ok ? kExitOk : kExitFailure;
    }
    if (*table) {
      const auto& names = verify::table_names();
      if (std::find(names.begin(), names.end(), quantity) == names.end()) {
        throw UsageError("unknown table: " + quantity);
      }
      write_output(verify::table_csv(quantity, spec), table_out, out);
      return kExitOk;
    }
    if (*list) {
      out << "functions:";
      for (const EvalFn& f : registry()) {
        out << "\n  " << f.name;
        for (const Param& p : f.params) out << " --" << p.name;
      }
      out << "\nsuites:\n";
      for (const std::string& s : verify::suite_names()) out << "  " << s << "\n";
      out << "  all\ntables:\n";
      for (const std::string& s : verify::table_names()) out << "  " << s << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "qcs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "qcs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "qcs: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcs::cli
