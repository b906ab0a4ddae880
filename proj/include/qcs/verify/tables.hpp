// CSV tables: a header row, then one row per value, 17 significant digits,
// LF line endings.
//
//   kernel     z_re,z_im,w_re,w_im,kernel_re,kernel_im,series_re,series_im,
//              arik_coon_re,arik_coon_im
//              z on a 5x5 grid of [-rho_max/2, rho_max/2]^2 with
//              rho_max = sqrt(q^m/(1-q)), w on three fixed points.
//   limits-q1  quantity,m,j,point,q,error,gated
//              the q -> 1 sweep at the given m (m-independent rows included).
//   energies   j,energy,classical
#pragma once

#include <string>
#include <vector>

namespace qcs::verify {

struct TableSpec {
  double q = 0.5;
  int m = 0;
  int j_max = 8;
};

const std::vector<std::string>& table_names();

/// Throws std::invalid_argument for an unknown quantity.
std::string table_csv(const std::string& quantity, const TableSpec& spec);

}  // namespace qcs::verify
