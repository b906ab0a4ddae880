// Verification suites. Each suite checks one family of identities on
// seeded random or fixed grids and gates every case at its tolerance.
// Quantities that are measured but not expected to vanish (printed
// variants that disagree with the corrected ones) go to observations.
#pragma once

#include <string>
#include <vector>

#include "qcs/verify/report.hpp"

namespace qcs::verify {

/// Suite names in the order "all" runs them.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const RunSettings& settings);

/// One report for a named suite, every suite for "all".
std::vector<SuiteReport> run_suites(const std::string& name, const RunSettings& settings);

}  // namespace qcs::verify
