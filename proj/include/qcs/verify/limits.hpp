// q -> 1 sweeps: the error of each deformed quantity against its classical
// target at q = 0.9, 0.99, 0.999 on fixed test points.
#pragma once

#include <array>
#include <string>
#include <vector>

namespace qcs::verify {

inline constexpr std::array<double, 3> kLimitQ{0.9, 0.99, 0.999};

struct LimitSeries {
  std::string quantity;
  /// -1 where the quantity has no such index.
  int m = -1;
  int j = -1;
  /// Index into the fixed test points of the quantity.
  int point = 0;
  std::array<double, 3> error{};
  /// False for printed variants that are measured but not expected to converge.
  bool gated = true;
};

/// Every series with m <= min(3, m_max) and j <= min(5, j_max), in a fixed order.
std::vector<LimitSeries> limit_sweep(int m_max, int j_max);

/// Largest ratio of consecutive errors; pairs that both sit below 1e-11 count as 0.
double decrease_ratio(const LimitSeries& s);

}  // namespace qcs::verify
