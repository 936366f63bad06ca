#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clifford/serialization.hpp"

namespace clifford {

struct SuiteConfig {
    int slots = 6;
    double width = 1.0;
    std::uint64_t seed = 1;
    double tolerance = 1e-10;
    std::string suite = "all";  // algebra | malliavin | ito | oracle | applications | all
};

/// Property batteries over seeded random elements; each suite appends named
/// assertions with numeric residuals.  A given config always produces the
/// same report.
Report run_suite(const SuiteConfig& config);

std::vector<std::string> suite_names();

}  // namespace clifford
