#ifndef OACODES_REPRODUCE_HPP
#define OACODES_REPRODUCE_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace oacodes {

struct ReproduceResult {
    bool ok = false;
    nlohmann::json report;
    nlohmann::json expected;
    std::string mismatch;  // empty when ok
};

std::vector<std::string> reproduce_targets();

/// Rebuilds the named artifact set and returns its report.
nlohmann::json build_target_report(const std::string& target);

/// Rebuilds and diffs against the bundled expectation.
ReproduceResult run_reproduce(const std::string& target);

}  // namespace oacodes

#endif
