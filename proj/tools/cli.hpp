// The qcs command line: eval, verify, table, list.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcs/qcore.hpp"

namespace qcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses "1.5", "-2e-3", "0.5+0.2i", "0.5-i", "3i" or "re,im".
std::optional<Complex> parse_complex(const std::string& s);

/// Comma-separated list of reals.
std::optional<std::vector<double>> parse_real_list(const std::string& s);

/// 15 significant digits; the imaginary part is omitted when it is exactly 0.
std::string format_value(Complex v);

/// Names accepted by eval, in listing order.
std::vector<std::string> eval_names();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcs::cli
