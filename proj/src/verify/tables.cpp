#include "qcs/verify/tables.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qcs/kernels.hpp"
#include "qcs/oscillator.hpp"
#include "qcs/verify/limits.hpp"

namespace qcs::verify {

namespace {

class Csv {
 public:
  explicit Csv(const std::string& header) : out_(header + "\n") {}

  Csv& num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return field(buf);
  }
  Csv& num(Complex v) { return num(v.real()).num(v.imag()); }
  Csv& integer(int v) { return field(std::to_string(v)); }
  Csv& field(const std::string& s) {
    if (!first_) out_ += ',';
    out_ += s;
    first_ = false;
    return *this;
  }
  void end() {
    out_ += '\n';
    first_ = true;
  }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
  bool first_ = true;
};

std::string kernel_table(const TableSpec& t) {
  require_q(t.q);
  if (t.m < 0) throw std::invalid_argument("m must be >= 0");
  const double rho_max = std::sqrt(std::pow(t.q, t.m) / (1.0 - t.q));
  const Complex ws[] = {Complex{0.3, 0.1}, Complex{-0.2, 0.25}, Complex{0.0, -0.35}};
  Csv csv("z_re,z_im,w_re,w_im,kernel_re,kernel_im,series_re,series_im,arik_coon_re,arik_coon_im");
  for (const Complex& w0 : ws) {
    const Complex w = w0 * rho_max;
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        const Complex z = Complex{0.25 * a, 0.25 * b} * rho_max;
        csv.num(z).num(w).num(kernel_qm_closed(z, w, t.m, t.q));
        csv.num(kernel_qm_series(z, w, t.m, t.q).value).num(arik_coon_kernel(z, w, t.q));
        csv.end();
      }
    }
  }
  return csv.str();
}

std::string limits_table(const TableSpec& t) {
  if (t.m < 0) throw std::invalid_argument("m must be >= 0");
  Csv csv("quantity,m,j,point,q,error,gated");
  for (const LimitSeries& s : limit_sweep(t.m, t.j_max)) {
    if (s.m != t.m && s.m != -1) continue;
    for (std::size_t i = 0; i < kLimitQ.size(); ++i) {
      csv.field(s.quantity);
      if (s.m >= 0) csv.integer(s.m); else csv.field("");
      if (s.j >= 0) csv.integer(s.j); else csv.field("");
      csv.integer(s.point).num(kLimitQ[i]).num(s.error[i]).field(s.gated ? "1" : "0");
      csv.end();
    }
  }
  return csv.str();
}

std::string energies_table(const TableSpec& t) {
  require_q(t.q);
  if (t.j_max < 0) throw std::invalid_argument("j-max must be >= 0");
  Csv csv("j,energy,classical");
  for (int j = 0; j <= t.j_max; ++j) {
    csv.integer(j).num(energy(j, t.q)).num(j + 0.5);
    csv.end();
  }
  return csv.str();
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> n{"kernel", "limits-q1", "energies"};
  return n;
}

std::string table_csv(const std::string& quantity, const TableSpec& spec) {
  if (quantity == "kernel") return kernel_table(spec);
  if (quantity == "limits-q1") return limits_table(spec);
  if (quantity == "energies") return energies_table(spec);
  throw std::invalid_argument("unknown table: " + quantity);
}

}  // namespace qcs::verify
